#include "poincare/grid.hpp"

#include <cmath>
#include <limits>

#include "poincare/errors.hpp"

namespace poincare {

Window square_window(double half_width) {
  return Window{-half_width, half_width, -half_width, half_width};
}

bool Grid::node_at(cplx w, long& i, long& j) const {
  double fi = w.real() / h, fj = w.imag() / h;
  i = std::lround(fi);
  j = std::lround(fj);
  if (std::abs(fi - i) > 1e-9 || std::abs(fj - j) > 1e-9) return false;
  return i >= i0 && i <= i1 && j >= j0 && j <= j1;
}

Grid build_grid(const ChartView& view, const Window& win, double h) {
  if (!(h > 0)) fail(ErrorKind::domain, "grid step must be positive");
  Grid g;
  g.h = h;
  g.i0 = static_cast<long>(std::ceil(win.x0 / h - 1e-9));
  g.i1 = static_cast<long>(std::floor(win.x1 / h + 1e-9));
  g.j0 = static_cast<long>(std::ceil(win.y0 / h - 1e-9));
  g.j1 = static_cast<long>(std::floor(win.y1 / h + 1e-9));
  if (g.i1 - g.i0 < 4 || g.j1 - g.j0 < 4)
    fail(ErrorKind::empty_grid, "window holds fewer than five nodes per side");

  const std::size_t total = static_cast<std::size_t>(g.nx()) * g.ny();
  g.cls.assign(total, NodeClass::exterior);
  g.geo.assign(total, 0.0);
  g.unknown.assign(total, -1);

  for (long j = g.j0; j <= g.j1; ++j) {
    for (long i = g.i0; i <= g.i1; ++i) {
      const cplx w = g.node(i, j);
      if (!view.in_region(w)) continue;
      const std::size_t k = g.idx(i, j);
      const double sc = view.signed_clearance(w);
      if (sc <= 2 * h) {
        g.cls[k] = NodeClass::band;
        g.geo[k] = std::max(sc, 1e-12 * h);
        continue;
      }
      const double pd = view.puncture_dist(w);
      if (pd < 4 * h) {
        g.cls[k] = NodeClass::ring;
        g.geo[k] = pd;
        continue;
      }
      if (i == g.i0 || i == g.i1 || j == g.j0 || j == g.j1) {
        g.cls[k] = NodeClass::truncation;
        continue;
      }
      g.cls[k] = NodeClass::interior;
      g.unknown[k] = g.n_unknown++;
    }
  }

  // no interior node may touch an exterior one; data nodes seal every stencil
  for (long j = g.j0; j <= g.j1; ++j)
    for (long i = g.i0; i <= g.i1; ++i) {
      if (g.cls[g.idx(i, j)] != NodeClass::interior) continue;
      const long di[4] = {1, -1, 0, 0}, dj[4] = {0, 0, 1, -1};
      for (int t = 0; t < 4; ++t)
        if (g.cls[g.idx(i + di[t], j + dj[t])] == NodeClass::exterior)
          fail(ErrorKind::invariant_violation,
               "interior node adjacent to an exterior node");
    }
  return g;
}

}  // namespace poincare
