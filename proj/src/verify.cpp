#include "poincare/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <optional>
#include <random>

#include "poincare/errors.hpp"
#include "poincare/resolve.hpp"

namespace poincare {
namespace {

constexpr double kPi = 3.14159265358979323846;

// One density, served either by a closed form or by a finished solve.
struct DensityHandle {
  std::string route;
  std::optional<MetricEval> oracle;
  std::optional<RegionSolvePlan> plan;
  Field field;

  double lambda(cplx z) const {
    if (oracle) {
      if (!oracle->in_domain(z)) fail(ErrorKind::domain, "sample point outside " + oracle->tag);
      return oracle->lambda(z);
    }
    return density_from_field(field, plan->chart, z);
  }
};

DensityHandle make_handle(const RegionSpec& r, Route route, double h) {
  DensityHandle dh;
  auto m = resolve_metric(r);
  if (route == Route::oracle || (route == Route::automatic && m)) {
    if (!m)
      fail(ErrorKind::unsupported_oracle,
           "no closed form matches this region; use the pde route");
    dh.oracle = std::move(*m);
    dh.route = "oracle:" + dh.oracle->tag;
    return dh;
  }
  if (!(h > 0.0)) fail(ErrorKind::structural, "pde route needs a positive step");
  dh.plan = plan_region_solve(r, h);
  SolveOptions opt;
  opt.h = h;
  opt.window = dh.plan->window;
  opt.far = dh.plan->far;
  dh.field = solve_liouville(*dh.plan->view, opt);
  dh.route = "pde";
  return dh;
}

// Scatter points over the interior, seeded from the probe set. Radii reach
// past each probe's clearance so samples spread into the whole component.
std::vector<cplx> draw_samples(const RegionSpec& inter, int want, std::mt19937_64& rng) {
  std::vector<cplx> out;
  auto probes = interior_probes(inter);
  if (probes.empty())
    fail(ErrorKind::domain, "no interior point found; the overlap looks empty");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  long guard = 60L * std::max(want, 1);
  while (static_cast<int>(out.size()) < want && guard-- > 0) {
    const Point& p = probes[static_cast<std::size_t>(rng() % probes.size())];
    double clr = distance_to_boundary(inter, p);
    double r = clr * (0.05 + 2.4 * unit(rng));
    double th = 2.0 * kPi * unit(rng);
    cplx z = cplx(p.x, p.y) + std::polar(r, th);
    if (!contains(inter, Point{z.real(), z.imag()})) continue;
    double d = distance_to_boundary(inter, Point{z.real(), z.imag()});
    if (d < 1e-9 * (1.0 + std::abs(z))) continue;
    out.push_back(z);
  }
  if (out.empty()) fail(ErrorKind::domain, "sampling found no usable interior point");
  return out;
}

// Lattice nodes of step h inside the overlap with clearance at least 4h, so a
// solve on any of the four regions holds genuine interior values there.
std::vector<cplx> lattice_samples(const RegionSpec& inter, double h, int max_samples,
                                  std::mt19937_64& rng) {
  double reach = 2.0;
  if (auto br = bounding_radius(inter)) {
    reach = *br;
  } else {
    for (const Point& p : interior_probes(inter))
      reach = std::max(reach, std::hypot(p.x, p.y) + 2.0);
  }
  long n = static_cast<long>(std::floor(reach / h)) + 1;
  std::vector<cplx> nodes;
  for (long j = -n; j <= n; ++j)
    for (long i = -n; i <= n; ++i) {
      Point p{i * h, j * h};
      if (!contains(inter, p)) continue;
      if (distance_to_boundary(inter, p) < 4.0 * h) continue;
      nodes.emplace_back(p.x, p.y);
    }
  if (nodes.empty())
    fail(ErrorKind::empty_grid, "no lattice node clears the sampling margin");
  for (std::size_t k = nodes.size(); k > 1; --k) {
    std::size_t r = static_cast<std::size_t>(rng() % k);
    std::swap(nodes[k - 1], nodes[r]);
  }
  if (static_cast<int>(nodes.size()) > max_samples)
    nodes.resize(static_cast<std::size_t>(max_samples));
  return nodes;
}

bool probes_inside(const RegionSpec& inner, const RegionSpec& outer) {
  auto ps = interior_probes(inner);
  if (ps.empty()) return false;
  for (const Point& p : ps)
    if (!contains(outer, p)) return false;
  return true;
}

}  // namespace

ProductReport verify_product_inequality(const RegionSpec& o1, const RegionSpec& o2,
                                        Route route, double tol,
                                        const std::vector<cplx>& required_points,
                                        double h, int max_samples,
                                        std::uint64_t seed) {
  RegionSpec inter = region_intersection({o1, o2});
  RegionSpec uni = region_union({o1, o2});

  ProductReport rep;
  rep.tolerance = tol;
  // witness-based: every probe of one factor landing in the other
  rep.nested = probes_inside(o1, o2) || probes_inside(o2, o1);

  DensityHandle h1 = make_handle(o1, route, h);
  DensityHandle h2 = make_handle(o2, route, h);
  DensityHandle hi = make_handle(inter, route, h);
  DensityHandle hu = make_handle(uni, route, h);
  rep.route1 = h1.route;
  rep.route2 = h2.route;
  rep.route_inter = hi.route;
  rep.route_union = hu.route;
  bool any_pde = h1.plan || h2.plan || hi.plan || hu.plan;
  rep.h = any_pde ? h : 0.0;
  for (const DensityHandle* dh : {&h1, &h2, &hi, &hu})
    if (dh->plan) rep.max_residual = std::max(rep.max_residual, dh->field.final_residual);

  std::mt19937_64 rng(seed);
  std::vector<cplx> pts;
  for (cplx rp : required_points) {
    if (!contains(inter, Point{rp.real(), rp.imag()}))
      fail(ErrorKind::domain, "required point lies outside the overlap");
    pts.push_back(rp);
  }
  std::vector<cplx> extra = any_pde ? lattice_samples(inter, h, max_samples, rng)
                                    : draw_samples(inter, max_samples, rng);
  pts.insert(pts.end(), extra.begin(), extra.end());

  rep.min_ratio = std::numeric_limits<double>::infinity();
  std::size_t n_required = required_points.size();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    RatioSample s;
    s.z = pts[k];
    try {
      s.l1 = h1.lambda(s.z);
      s.l2 = h2.lambda(s.z);
      s.l_inter = hi.lambda(s.z);
      s.l_union = hu.lambda(s.z);
    } catch (const Error&) {
      if (k < n_required) throw;  // required points may not be skipped
      continue;  // an optional sample fell off a solved hull; drop it
    }
    double denom = s.l_inter * s.l_union;
    if (!(denom > 0.0) || !std::isfinite(denom)) {
      if (k < n_required) fail(ErrorKind::invariant_violation, "nonpositive density product");
      continue;
    }
    s.ratio = (s.l1 * s.l2) / denom;
    if (s.ratio < rep.min_ratio) {
      rep.min_ratio = s.ratio;
      rep.argmin = s.z;
    }
    rep.samples.push_back(s);
  }
  if (rep.samples.empty())
    fail(ErrorKind::domain, "every sample point failed to evaluate");
  rep.pass = rep.min_ratio >= 1.0 - tol;
  return rep;
}

CurvatureCheckReport verify_product_curvature(const RegionSpec& o1,
                                              const RegionSpec& o2, cplx at,
                                              double fd_step, double match_tol,
                                              int max_samples,
                                              std::uint64_t seed) {
  RegionSpec inter = region_intersection({o1, o2});
  RegionSpec uni = region_union({o1, o2});
  auto m1 = resolve_metric(o1);
  auto m2 = resolve_metric(o2);
  auto mu = resolve_metric(uni);
  if (!m1 || !m2 || !mu)
    fail(ErrorKind::unsupported_oracle, "curvature check needs closed forms for both factors and their union");

  auto in_all = [&](cplx z) {
    return m1->in_domain(z) && m2->in_domain(z) && mu->in_domain(z);
  };
  auto comparison = [&](cplx z) { return m1->lambda(z) * m2->lambda(z) / mu->lambda(z); };
  auto k_alg = [&](cplx z) {
    double s = mu->lambda(z) / m1->lambda(z);
    double t = mu->lambda(z) / m2->lambda(z);
    return -s * s - t * t + s * s * t * t;
  };

  if (!in_all(at)) fail(ErrorKind::domain, "evaluation point outside the overlap");
  CurvatureCheckReport rep;
  rep.fd_step = fd_step;
  rep.match_tol = match_tol;
  rep.k_alg_at = k_alg(at);

  const cplx off[4] = {cplx(fd_step, 0), cplx(-fd_step, 0), cplx(0, fd_step), cplx(0, -fd_step)};
  for (cplx o : off)
    if (!in_all(at + o)) fail(ErrorKind::domain, "difference stencil leaves the overlap");
  double lap = -4.0 * std::log(comparison(at));
  for (cplx o : off) lap += std::log(comparison(at + o));
  lap /= fd_step * fd_step;
  double lam = comparison(at);
  rep.k_fd_at = -lap / (lam * lam);

  std::mt19937_64 rng(seed);
  rep.k_min = rep.k_max = rep.k_alg_at;
  for (cplx z : draw_samples(inter, max_samples, rng)) {
    if (!in_all(z)) continue;
    double k = k_alg(z);
    rep.k_min = std::min(rep.k_min, k);
    rep.k_max = std::max(rep.k_max, k);
  }
  rep.pass = std::abs(rep.k_fd_at - rep.k_alg_at) <= match_tol &&
             rep.k_min >= -2.0 - 1e-9 && rep.k_max < 0.0;
  return rep;
}

CapacitySubmultReport verify_capacity_submult(const RegionSpec& k1spec,
                                              const RegionSpec& k2spec,
                                              double tol,
                                              const CapacityOptions& copt) {
  CapacitySubmultReport rep;
  rep.tolerance = tol;
  RegionSpec inter = region_intersection({k1spec, k2spec});
  RegionSpec uni = region_union({k1spec, k2spec});
  rep.inter = compute_pcap(inter, copt);
  rep.degenerate = rep.inter.degenerate;
  rep.k1 = compute_pcap(k1spec, copt);
  rep.k2 = compute_pcap(k2spec, copt);
  rep.uni = compute_pcap(uni, copt);
  rep.lhs = rep.inter.pcap * rep.uni.pcap;
  rep.rhs = rep.k1.pcap * rep.k2.pcap;
  rep.pass = rep.lhs <= (1.0 + tol) * rep.rhs + 1e-15;
  return rep;
}

BoundaryApproachReport verify_boundary_ratio(const RegionSpec& o1,
                                             const RegionSpec& o2, cplx point,
                                             cplx inward, int steps) {
  if (steps < 2) fail(ErrorKind::structural, "need at least two approach steps");
  double nrm = std::abs(inward);
  if (!(nrm > 0.0)) fail(ErrorKind::structural, "approach direction is zero");
  inward /= nrm;

  RegionSpec inter = region_intersection({o1, o2});
  auto mi = resolve_metric(inter);
  auto m1 = resolve_metric(o1);
  auto m2 = resolve_metric(o2);
  if (!mi || !m1 || !m2)
    fail(ErrorKind::unsupported_oracle, "boundary approach needs closed forms");

  // the factor whose boundary the path runs into
  cplx z1 = point + inward * 0.1;
  Point p1{z1.real(), z1.imag()};
  if (!contains(inter, p1)) fail(ErrorKind::domain, "approach path starts outside the overlap");
  const MetricEval& near_factor =
      (distance_to_boundary(o1, p1) <= distance_to_boundary(o2, p1)) ? *m1 : *m2;

  BoundaryApproachReport rep;
  std::vector<double> gaps;
  for (int k = 1; k <= steps; ++k) {
    double off = std::pow(10.0, -k);
    cplx z = point + inward * off;
    if (!mi->in_domain(z) || !near_factor.in_domain(z))
      fail(ErrorKind::domain, "approach point left the overlap");
    double ratio = mi->lambda(z) / near_factor.lambda(z);
    rep.offsets.push_back(off);
    rep.ratios.push_back(ratio);
    gaps.push_back(std::abs(ratio - 1.0));
  }
  rep.final_gap = gaps.back();

  bool monotone = true;
  for (std::size_t k = 1; k < gaps.size(); ++k)
    if (gaps[k] > gaps[k - 1] * (1.0 + 1e-12) + 1e-16) monotone = false;

  double order_sum = 0.0;
  int order_n = 0;
  for (std::size_t k = 1; k < gaps.size(); ++k) {
    if (gaps[k - 1] > 1e-13 && gaps[k] > 1e-13) {
      order_sum += std::log10(gaps[k - 1] / gaps[k]);
      ++order_n;
    }
  }
  rep.decay_order = order_n > 0 ? order_sum / order_n : std::numeric_limits<double>::quiet_NaN();
  rep.pass = monotone && rep.final_gap <= 1e-9;
  return rep;
}

PinchReport verify_puncture_pinch(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0))
    fail(ErrorKind::domain, "offset must sit in (0, 1)");
  RegionSpec region = region_intersection(
      {RegionSpec{Disk{Point{1.0, 0.0}, 2.0}},
       RegionSpec{PuncturedPlane{{Point{1.0, 0.0}}}}});
  auto m = resolve_metric(region);
  if (!m) fail(ErrorKind::unsupported_oracle, "punctured disk did not resolve");

  PinchReport rep;
  rep.epsilon = epsilon;
  cplx z(1.0 + epsilon, 0.0);
  rep.lambda = m->lambda(z);
  rep.boundary_dist = distance_to_boundary(region, Point{z.real(), z.imag()});
  rep.product = rep.lambda * rep.boundary_dist;
  rep.reference = 1.0 / std::log(2.0 / epsilon);
  rep.pass = std::abs(rep.product - rep.reference) <= 1e-13 && rep.product <= 0.2;
  return rep;
}

ExhaustionReport verify_exhaustion(const RegionSpec& region, cplx at,
                                   const std::vector<double>& deltas, double h,
                                   double tol) {
  if (deltas.empty()) fail(ErrorKind::structural, "no erosion levels given");
  for (std::size_t k = 1; k < deltas.size(); ++k)
    if (!(deltas[k] < deltas[k - 1]))
      fail(ErrorKind::structural, "erosion levels must decrease");

  ExhaustionReport rep;
  rep.deltas = deltas;
  rep.tolerance = tol;

  RegionSolvePlan plan = plan_region_solve(region, h);
  if (auto m = resolve_metric(region)) rep.target = m->lambda(at);
  if (const Disk* d = std::get_if<Disk>(&region.node)) {
    for (double delta : deltas) {
      double r = d->radius - delta;
      cplx c(d->center.x, d->center.y);
      if (!(r > 0.0) || std::abs(at - c) >= r)
        fail(ErrorKind::exhausted, "erosion removed the evaluation point");
      rep.eroded_oracle.push_back(2.0 * r / (r * r - std::norm(at - c)));
    }
  }

  std::shared_ptr<const ChartView> base = plan.view;
  Field prev;
  bool have_prev = false;
  for (double delta : deltas) {
    ErodedView view(base, delta);
    SolveOptions opt;
    opt.h = h;
    opt.window = plan.window;
    opt.far = plan.far;
    opt.warm = have_prev ? &prev : nullptr;
    Field f = solve_liouville(view, opt);
    rep.values.push_back(density_from_field(f, plan.chart, at));
    prev = std::move(f);
    have_prev = true;
  }

  rep.monotone = true;
  for (std::size_t k = 1; k < rep.values.size(); ++k)
    if (!(rep.values[k] < rep.values[k - 1])) rep.monotone = false;

  bool close = true;
  if (!rep.eroded_oracle.empty()) {
    for (std::size_t k = 0; k < rep.values.size(); ++k) {
      double rel = std::abs(rep.values[k] - rep.eroded_oracle[k]) / rep.eroded_oracle[k];
      if (rel > tol) close = false;
    }
  }
  rep.pass = rep.monotone && close;
  return rep;
}

}  // namespace poincare
