#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "poincare/point.hpp"
#include "poincare/region.hpp"

namespace poincare {

// A density with a closed form. lambda throws ErrorKind::domain outside the
// domain of validity. curvature_sign is -1 for the hyperbolic entries and +1
// for the spherical one.
struct MetricEval {
  std::string tag;
  std::function<double(cplx)> lambda;
  std::function<bool(cplx)> in_domain;
  int curvature_sign = -1;
  // representative interior points, used by sampling-based checks
  std::vector<cplx> probes;
};

MetricEval metric_sphere();
MetricEval metric_disk(Point center, double radius);
MetricEval metric_halfplane(Point anchor, Point inward_normal);
MetricEval metric_exterior_disk(Point center, double radius);
MetricEval metric_punctured_disk(Point center, double radius);
MetricEval metric_annulus(Point center, double inner, double outer);
// opening in (0, 2*pi], bisector a unit direction from the vertex
MetricEval metric_wedge(Point vertex, double opening, Point bisector);

// Holomorphic maps with derivatives, for pullback metrics.
struct ConformalMap {
  std::string tag;
  std::function<cplx(cplx)> f;
  std::function<cplx(cplx)> df;
};

ConformalMap map_affine(cplx a, cplx b);            // a*z + b
ConformalMap map_power(double p);                   // z^p, arg taken in [0, 2*pi)
ConformalMap map_moebius(cplx a, cplx b, cplx c, cplx d);  // (a*z+b)/(c*z+d)
ConformalMap map_joukowski();                       // z + 1/z
ConformalMap map_compose(std::vector<ConformalMap> maps);  // applied in list order

// base density pulled back through f: lambda(z) = base(f(z)) * |f'(z)|.
// in_domain additionally requires z inside `domain`.
MetricEval metric_pullback(const MetricEval& base, const ConformalMap& map,
                           const RegionSpec& domain, const std::string& tag);

// Five-point check of the defining equation: laplacian of log(lambda) minus
// lambda^2 (vanishes for the hyperbolic entries, equals -2*lambda^2 for the
// sphere).
double curvature_residual(const MetricEval& m, cplx z, double fd_step);

// data values used on solver grids
double band_value(double curve_distance);      // -log d
double ring_value(double puncture_distance);   // -log(rho * log(1/rho))

}  // namespace poincare
