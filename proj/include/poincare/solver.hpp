#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "poincare/catalog.hpp"
#include "poincare/grid.hpp"

namespace poincare {

// Data model for in-region nodes on the window frame when the image domain
// extends past the window.
struct FarField {
  enum class Model {
    forbid,               // frame contact is an error; for fully bounded images
    halfplane_distance,   // u = -log(distance to the boundary image)
    puncture_at_infinity, // u = -log(|w| log|w|), needs |w| > 1.05
    superdomain           // u = log(density of an enclosing domain)
  };
  Model model = Model::forbid;
  std::shared_ptr<MetricEval> super;
};

enum class InitKind {
  clearance,     // u0 = log(2 / clearance), starts above the solution
  constant_max   // u0 = max of the boundary data, a grid supersolution
};

struct Field;

struct SolveOptions {
  double h = 0.0;
  Window window{};
  FarField far{};
  InitKind init = InitKind::clearance;
  int max_newton = 60;
  double tol = 1e-10;
  const Field* warm = nullptr;  // same window and step required
  int direct_limit = 200000;    // unknown count where factorization yields to CG
};

struct Field {
  Grid grid;
  std::vector<double> u;  // per node, NaN outside the computed set
  int newton_iters = 0;
  double final_residual = 0.0;
  std::vector<double> residual_history;
  std::vector<double> max_u_history;  // interior max after init and each step
  std::string linear_solver;
};

// Damped Newton for the discrete equation (five point laplacian of u) = e^{2u}
// with Dirichlet data from band, ring and far-field nodes. The reported
// residual is the compensated max norm over interior nodes.
Field solve_liouville(const ChartView& view, const SolveOptions& opt);

// exact-lattice read; throws out_of_hull when w is not a valued node
double field_u_at_node(const Field& f, cplx w);
// bilinear read; every corner of the containing cell must carry a value
double field_u_at(const Field& f, cplx w);
// density at the plane point z through the chart that produced f
double density_from_field(const Field& f, const ChartMap& chart, cplx z);

// writes "x,y,u,lambda" rows in chart coordinates, one line per valued node,
// after a comment line describing the chart and the step
void dump_field_csv(const Field& f, const ChartMap& chart, const std::string& path);

// fit v(h) = limit + C h^order through three refinement levels (h descending);
// order is NaN when the differences do not behave like a power law
struct Extrapolation {
  double limit;
  double order;
};
Extrapolation richardson(const std::array<double, 3>& h,
                         const std::array<double, 3>& v);

// Chart plan for solving a plane region
struct RegionSolvePlan {
  ChartMap chart;
  std::shared_ptr<ChartView> view;
  Window window{};
  FarField far{};
};
RegionSolvePlan plan_region_solve(const RegionSpec& region, double h_hint);

}  // namespace poincare
