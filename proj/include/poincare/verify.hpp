#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "poincare/capacity.hpp"
#include "poincare/region.hpp"
#include "poincare/solver.hpp"

namespace poincare {

enum class Route { oracle, pde, automatic };

struct RatioSample {
  cplx z;
  double l1, l2, l_inter, l_union;
  double ratio;  // (l1*l2) / (l_inter*l_union)
};

// Pointwise comparison of the four densities of a domain pair: the product of
// the pair against the product over intersection and union. The claim under
// test is ratio >= 1 everywhere on the intersection.
struct ProductReport {
  std::vector<RatioSample> samples;
  double min_ratio = 0.0;
  cplx argmin{0, 0};
  bool nested = false;  // one domain inside the other: equality expected
  double max_residual = 0.0;  // pde route only
  double h = 0.0;
  std::string route1, route2, route_inter, route_union;
  double tolerance = 0.0;
  bool pass = false;
};

ProductReport verify_product_inequality(const RegionSpec& o1, const RegionSpec& o2,
                                        Route route, double tol,
                                        const std::vector<cplx>& required_points,
                                        double h, int max_samples,
                                        std::uint64_t seed);

// Gauss curvature of the comparison density l1*l2/l_union on the
// intersection: algebraically -s^2 - t^2 + (s t)^2 with s = l_union/l1,
// t = l_union/l2, which stays within [-2, 0). Cross-checked against a finite
// difference of the defining expression at one point.
struct CurvatureCheckReport {
  double k_alg_at = 0.0;
  double k_fd_at = 0.0;
  double fd_step = 0.0;
  double k_min = 0.0, k_max = 0.0;  // over the sample set
  double match_tol = 0.0;
  bool pass = false;
};

CurvatureCheckReport verify_product_curvature(const RegionSpec& o1,
                                              const RegionSpec& o2, cplx at,
                                              double fd_step, double match_tol,
                                              int max_samples,
                                              std::uint64_t seed);

// Capacity form of the comparison: cap(K1 cap K2) * cap(K1 cup K2) against
// cap(K1) * cap(K2), with exact zero short-circuits.
struct CapacitySubmultReport {
  CapacityReport k1, k2, inter, uni;
  double lhs = 0.0, rhs = 0.0;
  bool degenerate = false;
  double tolerance = 0.0;
  bool pass = false;
};

CapacitySubmultReport verify_capacity_submult(const RegionSpec& k1spec,
                                              const RegionSpec& k2spec,
                                              double tol,
                                              const CapacityOptions& copt = {});

// Densities localize at smooth boundary: along z_k = p + dir * 10^{-k} the
// ratio of the intersection density to the nearer factor tends to 1.
struct BoundaryApproachReport {
  std::vector<double> offsets;
  std::vector<double> ratios;
  double final_gap = 0.0;
  double decay_order = 0.0;  // slope of log10|ratio-1| per decade
  bool pass = false;
};

BoundaryApproachReport verify_boundary_ratio(const RegionSpec& o1,
                                             const RegionSpec& o2, cplx point,
                                             cplx inward, int steps);

// The density-times-distance gauge collapses near an interior puncture:
// evaluated on the unit-scale punctured disk fixture at offset epsilon where
// the closed form gives 1/log(2/eps).
struct PinchReport {
  double epsilon = 0.0;
  double lambda = 0.0;
  double boundary_dist = 0.0;
  double product = 0.0;
  double reference = 0.0;
  bool pass = false;
};

PinchReport verify_puncture_pinch(double epsilon);

// Interior exhaustion: solve on the eroded domain for each delta at a fixed
// step and watch the values decrease toward the full-domain density.
struct ExhaustionReport {
  std::vector<double> deltas;
  std::vector<double> values;
  std::vector<double> eroded_oracle;  // filled when the region is a disk
  double target = 0.0;                // full-domain oracle when available
  bool monotone = false;
  double tolerance = 0.0;
  bool pass = false;
};

ExhaustionReport verify_exhaustion(const RegionSpec& region, cplx at,
                                   const std::vector<double>& deltas, double h,
                                   double tol);

}  // namespace poincare
