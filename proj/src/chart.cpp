#include "poincare/chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

const double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

double wrap2pi(double a) {
  a = std::fmod(a, 2 * kPi);
  return a < 0 ? a + 2 * kPi : a;
}

double ray_dist(cplx w, cplx p, cplx dir) {  // dir unit
  cplx q = w - p;
  double t = q.real() * dir.real() + q.imag() * dir.imag();
  if (t <= 0) return std::abs(q);
  return std::abs(q - t * dir);
}

bool circle_through_origin(cplx c, double r) {
  return std::abs(std::abs(c) - r) <= 1e-12 * std::max(1.0, r);
}

// distance from w to the image of the circle |z - c| = r under w = 1/z
double circle_image_dist(cplx c, double r, cplx w) {
  if (circle_through_origin(c, r)) {
    // image is the line Re(c w) = 1/2
    return std::abs((c * w).real() - 0.5) / std::abs(c);
  }
  double q = std::norm(c) - r * r;
  cplx m = std::conj(c) / q;
  double s = r / std::abs(q);
  return std::abs(std::abs(w - m) - s);
}

double circle_image_extent(cplx c, double r) {
  if (circle_through_origin(c, r)) return 0.0;
  double q = std::norm(c) - r * r;
  return (std::abs(c) + r) / std::abs(q);
}

// distance from w to the image of the line dot(n, z - a) = 0, n unit
double line_image_dist(Point n, Point a, cplx w) {
  double c0 = dot(n, a);
  cplx nu = to_cplx(n);
  if (std::abs(c0) <= 1e-13 * (1.0 + norm(a))) {
    return std::abs((nu * w).real());  // image is a line through 0
  }
  cplx m = std::conj(nu) / (2.0 * c0);
  double s = 1.0 / (2.0 * std::abs(c0));
  return std::abs(std::abs(w - m) - s);
}

double line_image_extent(Point n, Point a) {
  double c0 = dot(n, a);
  if (std::abs(c0) <= 1e-13 * (1.0 + norm(a))) return 0.0;
  return 1.0 / std::abs(c0);
}

// distance from w to the image of the segment [a, b] (coordinates relative to
// the inversion center)
double segment_image_dist(cplx a, cplx b, cplx w) {
  double cr = a.real() * b.imag() - a.imag() * b.real();
  double dt = a.real() * b.real() + a.imag() * b.imag();
  double scale = std::abs(a) * std::abs(b);
  if (std::abs(cr) <= 1e-14 * (scale + 1e-300)) {
    bool a0 = std::abs(a) == 0.0, b0 = std::abs(b) == 0.0;
    if (a0 || b0) {  // endpoint at the center: one ray
      cplx e = 1.0 / (a0 ? b : a);
      return ray_dist(w, e, e / std::abs(e));
    }
    if (dt < 0) {  // center interior to the segment: two opposite rays
      cplx A = 1.0 / a, B = 1.0 / b;
      return std::min(ray_dist(w, A, A / std::abs(A)),
                      ray_dist(w, B, B / std::abs(B)));
    }
    // collinear with the center but off it: image is again a segment
    cplx A = 1.0 / a, B = 1.0 / b;
    return segment_dist(to_point(w), to_point(A), to_point(B));
  }
  // generic: arc of the circle through 0, 1/a, 1/b, between the endpoint
  // images on the side away from 0
  cplx A = 1.0 / a, B = 1.0 / b;
  double det = A.real() * B.imag() - A.imag() * B.real();
  double ra = 0.5 * std::norm(A), rb = 0.5 * std::norm(B);
  cplx m((ra * B.imag() - rb * A.imag()) / det,
         (A.real() * rb - B.real() * ra) / det);
  double s = std::abs(m);
  double thA = std::arg(A - m), thB = std::arg(B - m), th0 = std::arg(-m);
  double sweep = wrap2pi(thB - thA);
  double start = thA;
  if (wrap2pi(th0 - thA) < sweep) {  // that side holds 0; use the other
    start = thB;
    sweep = 2 * kPi - sweep;
  }
  double phi = std::arg(w - m);
  if (wrap2pi(phi - start) <= sweep) return std::abs(std::abs(w - m) - s);
  return std::min(std::abs(w - A), std::abs(w - B));
}

double segment_image_extent(cplx a, cplx b) {
  bool a0 = std::abs(a) == 0.0, b0 = std::abs(b) == 0.0;
  if (a0 || b0) return std::abs(1.0 / (a0 ? b : a));
  double base = std::max(std::abs(1.0 / a), std::abs(1.0 / b));
  double cr = a.real() * b.imag() - a.imag() * b.real();
  if (std::abs(cr) <= 1e-14 * (std::abs(a) * std::abs(b) + 1e-300)) return base;
  cplx A = 1.0 / a, B = 1.0 / b;
  double det = A.real() * B.imag() - A.imag() * B.real();
  double ra = 0.5 * std::norm(A), rb = 0.5 * std::norm(B);
  cplx m((ra * B.imag() - rb * A.imag()) / det,
         (A.real() * rb - B.real() * ra) / det);
  return 2.0 * std::abs(m);
}

// image of the boundary arc of `which` circle of a lens (corners already
// known), restricted between the corner images
double lens_arc_image_dist(const KDisk& own, const KDisk& other, cplx k0,
                           cplx k1, cplx w) {
  cplx c = to_cplx(own.center);
  if (circle_through_origin(c, own.radius))
    fail(ErrorKind::unsupported_oracle,
         "lens arc on a circle through the inversion center is not supported");
  cplx u = (to_cplx(other.center) - c);
  u /= std::abs(u);
  cplx mid_z = c + own.radius * u;  // on the arc, strictly inside the other disk
  double q = std::norm(c) - own.radius * own.radius;
  cplx m = std::conj(c) / q;
  double s = own.radius / std::abs(q);
  cplx A = 1.0 / k0, B = 1.0 / k1, M = 1.0 / mid_z;
  double thA = std::arg(A - m), thB = std::arg(B - m), thM = std::arg(M - m);
  double sweep = wrap2pi(thB - thA);
  double start = thA;
  if (wrap2pi(thM - thA) > sweep) {
    start = thB;
    sweep = 2 * kPi - sweep;
  }
  double phi = std::arg(w - m);
  if (wrap2pi(phi - start) <= sweep) return std::abs(std::abs(w - m) - s);
  return std::min(std::abs(w - A), std::abs(w - B));
}

double primitive_extent_direct(const RegionSpec& r) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, DiskComplement>)
          return norm(n.center) + n.radius;
        else if constexpr (std::is_same_v<T, Segment>)
          return std::max(norm(n.a), norm(n.b));
        else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          double m = 0.0;
          for (const auto& q : n.punctures) m = std::max(m, norm(q));
          return m;
        } else if constexpr (std::is_same_v<T, UnionNode> ||
                             std::is_same_v<T, IntersectionNode>) {
          double m = 0.0;
          for (const auto& a : n.args) m = std::max(m, primitive_extent_direct(a));
          return m;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return primitive_extent_direct(n.arg.front());
        } else {
          return 0.0;
        }
      },
      r.node);
}

// signed clearance of the inverted image, assembled per primitive
double inverted_signed(const RegionSpec& r, cplx w, cplx zeta) {
  const bool at_inf = (w == cplx(0.0, 0.0));
  cplx z = at_inf ? cplx(0, 0) : zeta + 1.0 / w;
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnionNode>) {
          double v = -kInf;
          for (const auto& a : n.args)
            v = std::max(v, inverted_signed(a, w, zeta));
          return v;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          double v = kInf;
          for (const auto& a : n.args)
            v = std::min(v, inverted_signed(a, w, zeta));
          return v;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return -inverted_signed(n.arg.front(), w, zeta);
        } else if constexpr (std::is_same_v<T, Disk>) {
          double d = circle_image_dist(to_cplx(n.center) - zeta, n.radius, w);
          bool in = !at_inf && std::abs(z - to_cplx(n.center)) < n.radius;
          return in ? d : -d;
        } else if constexpr (std::is_same_v<T, DiskComplement>) {
          double d = circle_image_dist(to_cplx(n.center) - zeta, n.radius, w);
          bool in = at_inf || std::abs(z - to_cplx(n.center)) > n.radius;
          return in ? d : -d;
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          double d = line_image_dist(n.inward_normal, n.anchor - to_point(zeta), w);
          bool in = !at_inf && dot(to_point(z) - n.anchor, n.inward_normal) > 0;
          return in ? d : -d;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return -segment_image_dist(to_cplx(n.a) - zeta, to_cplx(n.b) - zeta, w);
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return kInf;
        } else {  // FullPlane
          return kInf;
        }
      },
      r.node);
}

// min unsigned distance from w to any primitive image curve, ignoring ops
double inverted_min_curve(const RegionSpec& r, cplx w, cplx zeta) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnionNode> || std::is_same_v<T, IntersectionNode>) {
          double v = kInf;
          for (const auto& a : n.args)
            v = std::min(v, inverted_min_curve(a, w, zeta));
          return v;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return inverted_min_curve(n.arg.front(), w, zeta);
        } else if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, DiskComplement>) {
          return circle_image_dist(to_cplx(n.center) - zeta, n.radius, w);
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return line_image_dist(n.inward_normal, n.anchor - to_point(zeta), w);
        } else if constexpr (std::is_same_v<T, Segment>) {
          return segment_image_dist(to_cplx(n.a) - zeta, to_cplx(n.b) - zeta, w);
        } else {
          return kInf;
        }
      },
      r.node);
}

double inverted_extent(const RegionSpec& r, cplx zeta) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnionNode> || std::is_same_v<T, IntersectionNode>) {
          double v = 0.0;
          for (const auto& a : n.args) v = std::max(v, inverted_extent(a, zeta));
          return v;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return inverted_extent(n.arg.front(), zeta);
        } else if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, DiskComplement>) {
          return circle_image_extent(to_cplx(n.center) - zeta, n.radius);
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return line_image_extent(n.inward_normal, n.anchor - to_point(zeta));
        } else if constexpr (std::is_same_v<T, Segment>) {
          return segment_image_extent(to_cplx(n.a) - zeta, to_cplx(n.b) - zeta);
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          double m = 0.0;
          for (const auto& q : n.punctures)
            if (to_cplx(q) != zeta) m = std::max(m, std::abs(1.0 / (to_cplx(q) - zeta)));
          return m;
        } else {
          return 0.0;
        }
      },
      r.node);
}

}  // namespace

cplx ChartMap::to_chart(cplx z) const {
  if (kind == Kind::identity) return z;
  return 1.0 / (z - zeta);
}

cplx ChartMap::from_chart(cplx w) const {
  if (kind == Kind::identity) return w;
  return zeta + 1.0 / w;
}

double ChartMap::jacobian_at(cplx w) const {
  if (kind == Kind::identity) return 1.0;
  return std::norm(w);
}

std::string ChartMap::describe() const {
  if (kind == Kind::identity) return "identity";
  char buf[80];
  std::snprintf(buf, sizeof(buf), "inverted zeta=%.17g,%.17g", zeta.real(),
                zeta.imag());
  return buf;
}

IdentityView::IdentityView(RegionSpec region) : region_(std::move(region)) {
  for (const Point& q : region_punctures(region_))
    punctures_.push_back(to_cplx(q));
  extent_ = primitive_extent_direct(region_);
}

bool IdentityView::in_region(cplx w) const { return contains(region_, to_point(w)); }

double IdentityView::signed_clearance(cplx w) const {
  return curve_clearance(region_, to_point(w));
}

double IdentityView::puncture_dist(cplx w) const {
  double v = kInf;
  for (const cplx& q : punctures_) v = std::min(v, std::abs(w - q));
  return v;
}

InvertedView::InvertedView(RegionSpec region, cplx zeta)
    : region_(std::move(region)), zeta_(zeta) {
  for (const Point& q : region_punctures(region_)) {
    cplx qc = to_cplx(q);
    if (qc != zeta_) punctures_.push_back(1.0 / (qc - zeta_));
  }
  if (!contains_inf(region_) &&
      inverted_min_curve(region_, cplx(0, 0), zeta_) > 0)
    punctures_.push_back(cplx(0, 0));
  extent_ = inverted_extent(region_, zeta_);
  for (const cplx& q : punctures_) extent_ = std::max(extent_, std::abs(q));
}

bool InvertedView::in_region(cplx w) const {
  if (w == cplx(0.0, 0.0)) return contains_inf(region_);
  return contains(region_, to_point(zeta_ + 1.0 / w));
}

double InvertedView::signed_clearance(cplx w) const {
  return inverted_signed(region_, w, zeta_);
}

double InvertedView::puncture_dist(cplx w) const {
  double v = kInf;
  for (const cplx& q : punctures_) v = std::min(v, std::abs(w - q));
  return v;
}

KView::KView(CompactSet k) : k_(std::move(k)) {
  for (const auto& part : k_.parts()) {
    if (const KPoints* pp = std::get_if<KPoints>(&part)) {
      for (const auto& q : pp->pts) {
        cplx qc = to_cplx(q);
        if (qc != cplx(0.0, 0.0)) punctures_.push_back(1.0 / qc);
      }
    }
  }
  for (const auto& part : k_.parts()) {
    double e = std::visit(
        [&](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>)
            return circle_image_extent(to_cplx(n.center), n.radius);
          else if constexpr (std::is_same_v<T, KSegment>)
            return segment_image_extent(to_cplx(n.a), to_cplx(n.b));
          else if constexpr (std::is_same_v<T, KLens>)
            return std::max(circle_image_extent(to_cplx(n.d1.center), n.d1.radius),
                            circle_image_extent(to_cplx(n.d2.center), n.d2.radius));
          else
            return 0.0;
        },
        part);
    extent_ = std::max(extent_, e);
  }
  for (const cplx& q : punctures_) extent_ = std::max(extent_, std::abs(q));
}

bool KView::in_region(cplx w) const {
  if (w == cplx(0.0, 0.0)) return true;  // infinity is interior to the complement
  return !k_.contains(to_point(1.0 / w));
}

double KView::signed_clearance(cplx w) const {
  const bool at_inf = (w == cplx(0.0, 0.0));
  Point z = at_inf ? Point{0, 0} : to_point(1.0 / w);
  double v = kInf;
  for (const auto& part : k_.parts()) {
    double d = std::visit(
        [&](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>) {
            double dd = circle_image_dist(to_cplx(n.center), n.radius, w);
            bool in = !at_inf && dist(z, n.center) <= n.radius;
            return in ? -dd : dd;
          } else if constexpr (std::is_same_v<T, KSegment>) {
            return segment_image_dist(to_cplx(n.a), to_cplx(n.b), w);
          } else if constexpr (std::is_same_v<T, KPoints>) {
            return kInf;
          } else {
            double dd = std::min(
                lens_arc_image_dist(n.d1, n.d2, to_cplx(n.corner0),
                                    to_cplx(n.corner1), w),
                lens_arc_image_dist(n.d2, n.d1, to_cplx(n.corner0),
                                    to_cplx(n.corner1), w));
            bool in = !at_inf && dist(z, n.d1.center) <= n.d1.radius &&
                      dist(z, n.d2.center) <= n.d2.radius;
            return in ? -dd : dd;
          }
        },
        part);
    v = std::min(v, d);
  }
  return v;
}

double KView::puncture_dist(cplx w) const {
  double v = kInf;
  for (const cplx& q : punctures_) v = std::min(v, std::abs(w - q));
  return v;
}

ErodedView::ErodedView(std::shared_ptr<const ChartView> base, double delta)
    : base_(std::move(base)), delta_(delta) {
  if (!(delta_ > 0)) fail(ErrorKind::domain, "erosion depth must be positive");
}

bool ErodedView::in_region(cplx w) const {
  return base_->in_region(w) && base_->signed_clearance(w) > delta_ &&
         base_->puncture_dist(w) > delta_;
}

double ErodedView::signed_clearance(cplx w) const {
  double v = base_->signed_clearance(w) - delta_;
  double p = base_->puncture_dist(w);
  if (p < kInf) v = std::min(v, p - delta_);
  return v;
}

double ErodedView::puncture_dist(cplx) const { return kInf; }

double ErodedView::bounded_extent() const { return base_->bounded_extent(); }

}  // namespace poincare
