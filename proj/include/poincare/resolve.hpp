#pragma once

#include <optional>

#include "poincare/catalog.hpp"
#include "poincare/region.hpp"

namespace poincare {

// Match a region against the catalog of closed-form densities. Rules:
//   disk, halfplane, diskcomplement primitives directly;
//   complement of a disk / of a diskcomplement;
//   disk minus its center point (punctured disk);
//   concentric disk-minus-disk (ring);
//   pair of halfplanes: nested or sector/co-sector through their crossing;
//   nested pair of disks.
// Returns nullopt when no rule applies; such regions go to the grid solver.
std::optional<MetricEval> resolve_metric(const RegionSpec& r);

}  // namespace poincare
