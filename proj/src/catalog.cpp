#include "poincare/catalog.hpp"

#include <cmath>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

const double kPi = 3.14159265358979323846;

[[noreturn]] void outside(const std::string& tag) {
  fail(ErrorKind::domain, "point outside the domain of metric " + tag);
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

}  // namespace

MetricEval metric_sphere() {
  MetricEval m;
  m.tag = "sphere";
  m.curvature_sign = +1;
  m.in_domain = [](cplx) { return true; };
  m.lambda = [](cplx z) { return 2.0 / (1.0 + std::norm(z)); };
  m.probes = {cplx(0, 0), cplx(1, 0), cplx(0.3, -0.7)};
  return m;
}

MetricEval metric_disk(Point center, double radius) {
  if (radius <= 0) fail(ErrorKind::domain, "disk radius must be positive");
  MetricEval m;
  m.tag = "disk(" + num(center.x) + "," + num(center.y) + ";" + num(radius) + ")";
  cplx c = to_cplx(center);
  double r = radius;
  m.in_domain = [c, r](cplx z) { return std::abs(z - c) < r; };
  m.lambda = [c, r, tag = m.tag](cplx z) {
    double q = r * r - std::norm(z - c);
    if (q <= 0) outside(tag);
    return 2.0 * r / q;
  };
  m.probes = {c, c + cplx(0.4 * r, 0), c + cplx(-0.2 * r, 0.5 * r)};
  return m;
}

MetricEval metric_halfplane(Point anchor, Point inward_normal) {
  Point n = (1.0 / norm(inward_normal)) * inward_normal;
  MetricEval m;
  m.tag = "halfplane";
  Point a = anchor;
  m.in_domain = [a, n](cplx z) { return dot(to_point(z) - a, n) > 0; };
  m.lambda = [a, n, tag = m.tag](cplx z) {
    double d = dot(to_point(z) - a, n);
    if (d <= 0) outside(tag);
    return 1.0 / d;
  };
  cplx nc = to_cplx(n), ac = to_cplx(a);
  m.probes = {ac + nc, ac + 2.5 * nc, ac + nc + cplx(0, 1) * nc};
  return m;
}

MetricEval metric_exterior_disk(Point center, double radius) {
  if (radius <= 0) fail(ErrorKind::domain, "disk radius must be positive");
  MetricEval m;
  m.tag = "exteriordisk(" + num(radius) + ")";
  cplx c = to_cplx(center);
  double r = radius;
  m.in_domain = [c, r](cplx z) { return std::abs(z - c) > r; };
  m.lambda = [c, r, tag = m.tag](cplx z) {
    double q = std::norm(z - c) - r * r;
    if (q <= 0) outside(tag);
    return 2.0 * r / q;
  };
  m.probes = {c + cplx(2 * r, 0), c + cplx(0, -3 * r), c + cplx(1.5 * r, 1.5 * r)};
  return m;
}

MetricEval metric_punctured_disk(Point center, double radius) {
  if (radius <= 0) fail(ErrorKind::domain, "disk radius must be positive");
  MetricEval m;
  m.tag = "punctureddisk(" + num(radius) + ")";
  cplx c = to_cplx(center);
  double R = radius;
  m.in_domain = [c, R](cplx z) {
    double rho = std::abs(z - c);
    return rho > 0 && rho < R;
  };
  m.lambda = [c, R, tag = m.tag](cplx z) {
    double rho = std::abs(z - c);
    if (rho <= 0 || rho >= R) outside(tag);
    return 1.0 / (rho * std::log(R / rho));
  };
  m.probes = {c + cplx(0.5 * R, 0), c + cplx(0, 0.1 * R), c + cplx(-0.7 * R, 0.1 * R)};
  return m;
}

MetricEval metric_annulus(Point center, double inner, double outer) {
  if (!(0 < inner && inner < outer))
    fail(ErrorKind::domain, "annulus radii must satisfy 0 < inner < outer");
  MetricEval m;
  m.tag = "annulus(" + num(inner) + "," + num(outer) + ")";
  cplx c = to_cplx(center);
  double a = inner;
  double mm = std::log(outer / inner);
  m.in_domain = [c, a, mm](cplx z) {
    double rho = std::abs(z - c);
    return rho > a && rho < a * std::exp(mm);
  };
  m.lambda = [c, a, mm, tag = m.tag](cplx z) {
    double rho = std::abs(z - c);
    if (rho <= a || rho >= a * std::exp(mm)) outside(tag);
    double s = std::sin(kPi * std::log(rho / a) / mm);
    return (kPi / mm) / (rho * s);
  };
  double mid = a * std::exp(0.5 * mm);
  m.probes = {c + cplx(mid, 0), c + cplx(0, -mid), c + cplx(a * std::exp(0.25 * mm), 0)};
  return m;
}

MetricEval metric_wedge(Point vertex, double opening, Point bisector) {
  if (!(opening > 0 && opening <= 2 * kPi))
    fail(ErrorKind::domain, "wedge opening must lie in (0, 2*pi]");
  if (norm(bisector) == 0)
    fail(ErrorKind::domain, "wedge bisector must be nonzero");
  MetricEval m;
  m.tag = "wedge(" + num(opening) + ")";
  cplx v = to_cplx(vertex);
  double theta = opening;
  double beta = std::atan2(bisector.y, bisector.x);
  // rotate so the wedge occupies angles (0, theta)
  cplx rot = std::polar(1.0, -(beta - theta / 2));
  double p = kPi / theta;
  auto angle_in = [theta, rot, v](cplx z, double& aphi, double& arho) {
    cplx zeta = (z - v) * rot;
    arho = std::abs(zeta);
    if (arho == 0) return false;
    double phi = std::arg(zeta);
    if (phi < 0) phi += 2 * kPi;
    aphi = phi;
    return phi > 0 && phi < theta;
  };
  m.in_domain = [angle_in](cplx z) {
    double phi, rho;
    return angle_in(z, phi, rho);
  };
  m.lambda = [angle_in, p, tag = m.tag](cplx z) {
    double phi, rho;
    if (!angle_in(z, phi, rho)) outside(tag);
    return p / (rho * std::sin(p * phi));
  };
  cplx bis = std::polar(1.0, beta);
  m.probes = {v + bis, v + 2.0 * bis, v + 0.5 * bis * std::polar(1.0, 0.3 * theta)};
  return m;
}

ConformalMap map_affine(cplx a, cplx b) {
  if (a == cplx(0, 0)) fail(ErrorKind::domain, "affine map needs a != 0");
  return ConformalMap{"affine", [a, b](cplx z) { return a * z + b; },
                      [a](cplx) { return a; }};
}

ConformalMap map_power(double p) {
  if (p == 0) fail(ErrorKind::domain, "power map needs p != 0");
  // branch with arg in [0, 2*pi), continuous off the positive real axis
  auto f = [p](cplx z) {
    double r = std::abs(z);
    if (r == 0) return cplx(0, 0);
    double phi = std::arg(z);
    if (phi < 0) phi += 2 * kPi;
    return std::polar(std::pow(r, p), p * phi);
  };
  return ConformalMap{"power", f, [p, f](cplx z) {
                        if (z == cplx(0, 0))
                          fail(ErrorKind::domain, "power map derivative at 0");
                        return p * f(z) / z;
                      }};
}

ConformalMap map_moebius(cplx a, cplx b, cplx c, cplx d) {
  cplx det = a * d - b * c;
  if (det == cplx(0, 0)) fail(ErrorKind::domain, "moebius map is degenerate");
  return ConformalMap{"moebius",
                      [a, b, c, d](cplx z) { return (a * z + b) / (c * z + d); },
                      [c, d, det](cplx z) {
                        cplx q = c * z + d;
                        return det / (q * q);
                      }};
}

ConformalMap map_joukowski() {
  return ConformalMap{"joukowski", [](cplx z) { return z + 1.0 / z; },
                      [](cplx z) { return 1.0 - 1.0 / (z * z); }};
}

ConformalMap map_compose(std::vector<ConformalMap> maps) {
  if (maps.empty()) fail(ErrorKind::domain, "empty composition");
  std::string tag = "compose(";
  for (size_t i = 0; i < maps.size(); ++i) tag += (i ? "," : "") + maps[i].tag;
  tag += ")";
  auto list = std::make_shared<std::vector<ConformalMap>>(std::move(maps));
  return ConformalMap{
      tag,
      [list](cplx z) {
        for (const auto& m : *list) z = m.f(z);
        return z;
      },
      [list](cplx z) {
        cplx d(1, 0);
        for (const auto& m : *list) {
          d *= m.df(z);
          z = m.f(z);
        }
        return d;
      }};
}

MetricEval metric_pullback(const MetricEval& base, const ConformalMap& map,
                           const RegionSpec& domain, const std::string& tag) {
  MetricEval m;
  m.tag = tag;
  m.curvature_sign = base.curvature_sign;
  auto dom = std::make_shared<RegionSpec>(domain);
  auto blam = base.lambda;
  auto bin = base.in_domain;
  auto f = map.f;
  auto df = map.df;
  m.in_domain = [dom, bin, f](cplx z) {
    return contains(*dom, to_point(z)) && bin(f(z));
  };
  m.lambda = [blam, f, df](cplx z) { return blam(f(z)) * std::abs(df(z)); };
  std::vector<Point> cands;
  for (const auto& q : interior_probes(domain)) cands.push_back(q);
  for (const auto& q : cands)
    if (m.in_domain(to_cplx(q))) m.probes.push_back(to_cplx(q));
  return m;
}

double curvature_residual(const MetricEval& m, cplx z, double fd_step) {
  const double h = fd_step;
  auto lg = [&](cplx w) { return std::log(m.lambda(w)); };
  double lap = (lg(z + cplx(h, 0)) + lg(z - cplx(h, 0)) + lg(z + cplx(0, h)) +
                lg(z - cplx(0, h)) - 4.0 * lg(z)) /
               (h * h);
  double lam = m.lambda(z);
  return lap - lam * lam;
}

double band_value(double curve_distance) {
  if (!(curve_distance > 0))
    fail(ErrorKind::degenerate_band, "band distance must be positive");
  return -std::log(curve_distance);
}

double ring_value(double puncture_distance) {
  const double rho = puncture_distance;
  if (!(rho > 0 && rho < 0.3679))
    fail(ErrorKind::degenerate_band,
         "puncture ring radius must lie in (0, 1/e)");
  return -std::log(rho * std::log(1.0 / rho));
}

}  // namespace poincare
