#include "poincare/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

using SpMat = Eigen::SparseMatrix<double>;

double neumaier(const double* t, int n) {
  double s = t[0], c = 0.0;
  for (int i = 1; i < n; ++i) {
    double x = t[i];
    double sum = s + x;
    if (std::abs(s) >= std::abs(x))
      c += (s - sum) + x;
    else
      c += (x - sum) + s;
    s = sum;
  }
  return s + c;
}

struct NodeRef {
  long i, j;
  std::size_t k;
};

double truncation_value(const ChartView& view, const FarField& far, cplx w) {
  switch (far.model) {
    case FarField::Model::forbid:
      fail(ErrorKind::domain,
           "domain reaches the window frame but no far-field model is set");
    case FarField::Model::halfplane_distance: {
      double d = std::abs(view.signed_clearance(w));
      return -std::log(std::max(d, 1e-300));
    }
    case FarField::Model::puncture_at_infinity: {
      double r = std::abs(w);
      if (r <= 1.05)
        fail(ErrorKind::domain,
             "window too small for the puncture far-field model");
      return -std::log(r * std::log(r));
    }
    case FarField::Model::superdomain:
      if (!far.super)
        fail(ErrorKind::domain, "superdomain far field without a density");
      return std::log(far.super->lambda(w));
  }
  fail(ErrorKind::domain, "unknown far-field model");
}

// compensated residual of the discrete equation over interior nodes;
// optionally fills the unknown-indexed vector
double residual_max(const Grid& g, const std::vector<double>& u,
                    const std::vector<NodeRef>& interior, double* F_out) {
  const double h2 = g.h * g.h;
  double worst = 0.0;
  for (const NodeRef& n : interior) {
    const double uc = u[n.k];
    const double terms[6] = {u[g.idx(n.i + 1, n.j)], u[g.idx(n.i - 1, n.j)],
                             u[g.idx(n.i, n.j + 1)], u[g.idx(n.i, n.j - 1)],
                             -4.0 * uc, -h2 * std::exp(2.0 * uc)};
    const double F = neumaier(terms, 6) / h2;
    if (F_out) F_out[g.unknown[n.k]] = F;
    worst = std::max(worst, std::abs(F));
  }
  return worst;
}

}  // namespace

Field solve_liouville(const ChartView& view, const SolveOptions& opt) {
  Field f;
  f.grid = build_grid(view, opt.window, opt.h);
  Grid& g = f.grid;
  if (g.n_unknown == 0)
    fail(ErrorKind::empty_grid, "no interior nodes in the window");

  const std::size_t total = g.cls.size();
  f.u.assign(total, kNaN);

  bool has_ring = false;
  std::vector<NodeRef> interior;
  interior.reserve(g.n_unknown);
  for (long j = g.j0; j <= g.j1; ++j)
    for (long i = g.i0; i <= g.i1; ++i) {
      const std::size_t k = g.idx(i, j);
      switch (g.cls[k]) {
        case NodeClass::band:
          f.u[k] = band_value(g.geo[k]);
          break;
        case NodeClass::ring:
          f.u[k] = ring_value(g.geo[k]);
          has_ring = true;
          break;
        case NodeClass::truncation:
          f.u[k] = truncation_value(view, opt.far, g.node(i, j));
          break;
        case NodeClass::interior:
          interior.push_back(NodeRef{i, j, k});
          break;
        default:
          break;
      }
    }
  if (has_ring && 4 * opt.h > 0.3)
    fail(ErrorKind::degenerate_band,
         "step too coarse for puncture rings: need 4h <= 0.3");

  // initial guess
  if (opt.warm) {
    const Grid& wg = opt.warm->grid;
    if (wg.h != g.h || wg.i0 != g.i0 || wg.i1 != g.i1 || wg.j0 != g.j0 ||
        wg.j1 != g.j1)
      fail(ErrorKind::domain, "warm start requires the same window and step");
  }
  double data_max = -kInf;
  if (opt.init == InitKind::constant_max) {
    for (std::size_t k = 0; k < total; ++k)
      if (std::isfinite(f.u[k])) data_max = std::max(data_max, f.u[k]);
  }
  for (const NodeRef& n : interior) {
    double v;
    if (opt.warm && std::isfinite(opt.warm->u[n.k])) {
      v = opt.warm->u[n.k];
    } else if (opt.init == InitKind::constant_max) {
      v = data_max;
    } else {
      double d = view.signed_clearance(g.node(n.i, n.j));
      v = std::log(2.0 / std::max(d, 1e-12));
    }
    f.u[n.k] = v;
  }

  auto interior_max = [&]() {
    double m = -kInf;
    for (const NodeRef& n : interior) m = std::max(m, f.u[n.k]);
    return m;
  };
  f.max_u_history.push_back(interior_max());

  // linear system scaffolding (pattern fixed across iterations)
  const int n = g.n_unknown;
  SpMat A(n, n);
  {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(5 * static_cast<std::size_t>(n));
    const double offd = -1.0 / (g.h * g.h);
    for (const NodeRef& nd : interior) {
      const int row = g.unknown[nd.k];
      trip.emplace_back(row, row, 1.0);  // value refreshed every iteration
      const long di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int t = 0; t < 4; ++t) {
        const int col = g.unknown[g.idx(nd.i + di[t], nd.j + dj[t])];
        if (col >= 0) trip.emplace_back(row, col, offd);
      }
    }
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
  }
  std::vector<std::ptrdiff_t> diag_pos(n, -1);
  for (int k = 0; k < n; ++k) {
    for (std::ptrdiff_t p = A.outerIndexPtr()[k]; p < A.outerIndexPtr()[k + 1]; ++p)
      if (A.innerIndexPtr()[p] == k) diag_pos[k] = p;
    if (diag_pos[k] < 0) fail(ErrorKind::singular_system, "missing diagonal");
  }

  const bool direct = n <= opt.direct_limit;
  f.linear_solver = direct ? "ldlt" : "cg-ic";
  Eigen::SimplicialLDLT<SpMat> ldlt;
  Eigen::ConjugateGradient<SpMat, Eigen::Lower | Eigen::Upper,
                           Eigen::IncompleteCholesky<double>>
      cg;
  if (direct) ldlt.analyzePattern(A);
  cg.setTolerance(1e-12);
  cg.setMaxIterations(4000);

  Eigen::VectorXd F(n), delta(n);
  std::vector<double> trial(f.u);

  double res = residual_max(g, f.u, interior, F.data());
  f.residual_history.push_back(res);
  int iter = 0;
  while (res > opt.tol) {
    if (iter >= opt.max_newton)
      fail(ErrorKind::no_convergence, "newton iteration limit reached");
    const double inv_h2 = 1.0 / (g.h * g.h);
    for (const NodeRef& nd : interior) {
      const int row = g.unknown[nd.k];
      A.valuePtr()[diag_pos[row]] = 4.0 * inv_h2 + 2.0 * std::exp(2.0 * f.u[nd.k]);
    }
    if (direct) {
      ldlt.factorize(A);
      if (ldlt.info() != Eigen::Success)
        fail(ErrorKind::singular_system, "factorization failed");
      delta = ldlt.solve(F);
    } else {
      cg.compute(A);
      delta = cg.solve(F);
      // an unconverged iterate is still a usable direction; the damping loop
      // below rejects it if it fails to reduce the residual
      if (!delta.allFinite())
        fail(ErrorKind::singular_system, "iterative solve produced a non-finite step");
    }

    double alpha = 1.0;
    bool accepted = false;
    for (int halving = 0; halving < 30; ++halving) {
      for (const NodeRef& nd : interior)
        trial[nd.k] = f.u[nd.k] + alpha * delta[g.unknown[nd.k]];
      const double res_trial = residual_max(g, trial, interior, nullptr);
      if (res_trial < res) {
        for (const NodeRef& nd : interior) f.u[nd.k] = trial[nd.k];
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted)
      fail(ErrorKind::no_convergence, "step damping found no residual decrease");
    ++iter;
    res = residual_max(g, f.u, interior, F.data());
    f.residual_history.push_back(res);
    f.max_u_history.push_back(interior_max());
  }
  f.newton_iters = iter;
  f.final_residual = res;
  return f;
}

double field_u_at_node(const Field& f, cplx w) {
  long i, j;
  if (!f.grid.node_at(w, i, j))
    fail(ErrorKind::out_of_hull, "point is not a grid node");
  double v = f.u[f.grid.idx(i, j)];
  if (!std::isfinite(v))
    fail(ErrorKind::out_of_hull, "grid node carries no value");
  return v;
}

double field_u_at(const Field& f, cplx w) {
  const Grid& g = f.grid;
  {
    long i, j;
    if (g.node_at(w, i, j)) {
      double v = g.cls[g.idx(i, j)] == NodeClass::exterior ? kNaN : f.u[g.idx(i, j)];
      if (std::isfinite(v)) return v;
    }
  }
  const double fx = w.real() / g.h, fy = w.imag() / g.h;
  const long i = static_cast<long>(std::floor(fx));
  const long j = static_cast<long>(std::floor(fy));
  if (i < g.i0 || i + 1 > g.i1 || j < g.j0 || j + 1 > g.j1)
    fail(ErrorKind::out_of_hull, "point outside the solved window");
  const double a = fx - i, b = fy - j;
  const double v00 = f.u[g.idx(i, j)], v10 = f.u[g.idx(i + 1, j)];
  const double v01 = f.u[g.idx(i, j + 1)], v11 = f.u[g.idx(i + 1, j + 1)];
  if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
      !std::isfinite(v11))
    fail(ErrorKind::out_of_hull, "interpolation cell touches unvalued nodes");
  return (1 - a) * (1 - b) * v00 + a * (1 - b) * v10 + (1 - a) * b * v01 +
         a * b * v11;
}

double density_from_field(const Field& f, const ChartMap& chart, cplx z) {
  const cplx w = chart.to_chart(z);
  return std::exp(field_u_at(f, w)) * chart.jacobian_at(w);
}

void dump_field_csv(const Field& f, const ChartMap& chart,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::structural, "cannot open dump file: " + path);
  char line[160];
  std::snprintf(line, sizeof(line), "# chart=%s h=%.17g\n",
                chart.describe().c_str(), f.grid.h);
  out << line << "x,y,u,lambda\n";
  const Grid& g = f.grid;
  for (long j = g.j0; j <= g.j1; ++j)
    for (long i = g.i0; i <= g.i1; ++i) {
      const double v = f.u[g.idx(i, j)];
      if (!std::isfinite(v)) continue;
      const cplx w = g.node(i, j);
      std::snprintf(line, sizeof(line), "%.17g,%.17g,%.17g,%.17g\n", w.real(),
                    w.imag(), v, std::exp(v));
      out << line;
    }
}

Extrapolation richardson(const std::array<double, 3>& h,
                         const std::array<double, 3>& v) {
  const double d12 = v[0] - v[1], d23 = v[1] - v[2];
  if (std::abs(d23) < 1e-300 || std::abs(d12) < 1e-300)
    return {v[2], kNaN};
  const double t = d12 / d23;
  if (!(t > 0)) return {v[2], kNaN};
  auto ratio = [&](double p) {
    return (std::pow(h[0], p) - std::pow(h[1], p)) /
           (std::pow(h[1], p) - std::pow(h[2], p));
  };
  double lo = 0.05, hi = 10.0;
  if (ratio(lo) > t || ratio(hi) < t) return {v[2], kNaN};
  for (int it = 0; it < 80; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ratio(mid) < t ? lo : hi) = mid;
  }
  const double p = 0.5 * (lo + hi);
  const double C = d23 / (std::pow(h[1], p) - std::pow(h[2], p));
  return {v[2] - C * std::pow(h[2], p), p};
}

RegionSolvePlan plan_region_solve(const RegionSpec& region, double h_hint) {
  RegionSolvePlan plan;
  if (auto R = bounding_radius(region)) {
    plan.chart = ChartMap{ChartMap::Kind::identity, cplx(0, 0)};
    plan.view = std::make_shared<IdentityView>(region);
    const double pad = 3 * h_hint + 0.01;
    plan.window = square_window(*R + pad);
    plan.far.model = FarField::Model::forbid;
    return plan;
  }
  const auto outside = exterior_probes(region);
  if (!outside.empty()) {
    const Point zeta = outside.front();
    const double dpos = -curve_clearance(region, zeta);
    plan.chart = ChartMap{ChartMap::Kind::inverted, to_cplx(zeta)};
    plan.view = std::make_shared<InvertedView>(region, to_cplx(zeta));
    plan.window = square_window(1.1 / dpos);
    plan.far.model = FarField::Model::forbid;
    return plan;
  }
  const auto punct = region_punctures(region);
  if (!punct.empty()) {
    const cplx zeta = to_cplx(punct.front());
    plan.chart = ChartMap{ChartMap::Kind::inverted, zeta};
    plan.view = std::make_shared<InvertedView>(region, zeta);
    plan.window =
        square_window(std::max(3.0, 1.3 * plan.view->bounded_extent() + 0.5));
    plan.far.model = FarField::Model::puncture_at_infinity;
    return plan;
  }
  // a slit: anchor the chart on a segment midpoint
  struct SegFinder {
    static const Segment* find(const RegionSpec& r) {
      return std::visit(
          [](const auto& n) -> const Segment* {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Segment>) return &n;
            else if constexpr (std::is_same_v<T, UnionNode> ||
                               std::is_same_v<T, IntersectionNode>) {
              for (const auto& a : n.args)
                if (const Segment* s = find(a)) return s;
              return nullptr;
            } else if constexpr (std::is_same_v<T, ComplementNode>) {
              return find(n.arg.front());
            } else {
              return nullptr;
            }
          },
          r.node);
    }
  };
  if (const Segment* s = SegFinder::find(region)) {
    const cplx zeta = 0.5 * (to_cplx(s->a) + to_cplx(s->b));
    plan.chart = ChartMap{ChartMap::Kind::inverted, zeta};
    plan.view = std::make_shared<InvertedView>(region, zeta);
    plan.window =
        square_window(std::max(4.0, 1.3 * plan.view->bounded_extent() + 0.5));
    plan.far.model = FarField::Model::halfplane_distance;
    return plan;
  }
  fail(ErrorKind::domain, "no usable chart for this unbounded region");
}

}  // namespace poincare
