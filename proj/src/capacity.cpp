#include "poincare/capacity.hpp"

#include <cmath>
#include <limits>

#include "poincare/errors.hpp"

namespace poincare {

CapacityReport compute_pcap(const RegionSpec& compact_spec,
                            const CapacityOptions& opt) {
  CapacityReport rep;
  CompactSet k = CompactSet::from_region(compact_spec);
  rep.point_class = k.point_class();
  if (rep.point_class <= 2) {
    rep.degenerate = true;
    rep.pcap = 0.0;
    rep.extrapolated = 0.0;
    return rep;
  }

  if (k.origin_kind() == OriginKind::not_in_set) {
    if (!opt.allow_translate)
      fail(ErrorKind::domain,
           "the set misses the origin and translation is disabled");
    Point a = k.inner_anchor();
    k = k.translated(Point{-a.x, -a.y});
    rep.translated = true;
    rep.translated_by = a;
  }

  KView view(std::move(k));
  const CompactSet& set = view.set();

  double W = 0.0;
  FarField far;
  std::vector<double> levels = opt.levels;
  switch (set.origin_kind()) {
    case OriginKind::interior: {
      const double clear0 = set.depth(Point{0, 0});
      W = opt.window_scale / clear0;
      far.model = FarField::Model::forbid;
      if (levels.empty()) levels = {W / 48, W / 96, W / 192};
      break;
    }
    case OriginKind::curve_boundary: {
      W = std::max(4.0, 1.3 * view.bounded_extent() + 0.5);
      far.model = FarField::Model::halfplane_distance;
      if (levels.empty()) levels = {W / 64, W / 128, W / 256};
      break;
    }
    case OriginKind::isolated_point: {
      W = std::max(3.0, 1.3 * view.bounded_extent() + 0.5);
      far.model = FarField::Model::puncture_at_infinity;
      if (levels.empty()) levels = {W / 64, W / 128, W / 256};
      break;
    }
    default:
      fail(ErrorKind::invariant_violation, "origin still outside the set");
  }
  rep.window = W;
  rep.far_field = far.model == FarField::Model::forbid ? "none"
                  : far.model == FarField::Model::halfplane_distance
                      ? "halfplane-distance"
                      : "puncture-at-infinity";

  for (double h : levels) {
    SolveOptions so;
    so.h = h;
    so.window = square_window(W);
    so.far = far;
    Field f = solve_liouville(view, so);
    const double mu0 = std::exp(field_u_at_node(f, cplx(0, 0)));
    rep.level_h.push_back(h);
    rep.level_value.push_back(0.5 * mu0);
    rep.level_newton.push_back(f.newton_iters);
    rep.level_residual.push_back(f.final_residual);
  }

  if (rep.level_value.size() == 3) {
    Extrapolation ex =
        richardson({rep.level_h[0], rep.level_h[1], rep.level_h[2]},
                   {rep.level_value[0], rep.level_value[1], rep.level_value[2]});
    rep.extrapolated = ex.limit;
    rep.order = ex.order;
    rep.pcap = ex.limit;
  } else {
    rep.extrapolated = rep.level_value.back();
    rep.order = std::numeric_limits<double>::quiet_NaN();
    rep.pcap = rep.level_value.back();
  }
  return rep;
}

double cap_disk_exact(double radius) { return radius; }

double cap_segment_exact(double length) { return 0.25 * length; }

}  // namespace poincare
