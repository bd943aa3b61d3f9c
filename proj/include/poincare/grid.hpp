#pragma once

#include <cstdint>
#include <vector>

#include "poincare/chart.hpp"
#include "poincare/point.hpp"

namespace poincare {

enum class NodeClass : std::uint8_t { exterior, interior, band, ring, truncation };

struct Window {
  double x0, x1, y0, y1;
};

Window square_window(double half_width);

// Nodes sit at integer multiples of h, so grids with nested step sizes share
// node locations. Classes:
//   band        within 2h of the curve boundary, Dirichlet from -log d
//   ring        within 4h of a puncture, Dirichlet from the puncture model
//   truncation  in-region nodes on the window frame, Dirichlet from far field
//   interior    unknowns of the solve
// band beats ring on ties; no interior node touches an exterior node.
struct Grid {
  double h = 0.0;
  long i0 = 0, i1 = -1, j0 = 0, j1 = -1;
  std::vector<NodeClass> cls;
  std::vector<double> geo;  // band: clearance, ring: puncture distance
  std::vector<int> unknown;
  int n_unknown = 0;

  long nx() const { return i1 - i0 + 1; }
  long ny() const { return j1 - j0 + 1; }
  std::size_t idx(long i, long j) const {
    return static_cast<std::size_t>(j - j0) * static_cast<std::size_t>(nx()) +
           static_cast<std::size_t>(i - i0);
  }
  cplx node(long i, long j) const { return cplx(i * h, j * h); }
  bool node_at(cplx w, long& i, long& j) const;  // exact lattice hit
};

Grid build_grid(const ChartView& view, const Window& win, double h);

}  // namespace poincare
