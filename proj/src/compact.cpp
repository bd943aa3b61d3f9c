#include "poincare/compact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool disk_contains(const KDisk& d, const Point& p) {
  return dist(p, d.center) <= d.radius;
}

double disk_depth(const KDisk& d, const Point& p) {
  return std::max(0.0, d.radius - dist(p, d.center));
}

// Intersection of two closed disks, reduced to a normal form.
KPart intersect_disks(const KDisk& a, const KDisk& b) {
  const double d = dist(a.center, b.center);
  if (d > a.radius + b.radius) return KPoints{};  // disjoint
  if (d == a.radius + b.radius) {
    // external tangency, a single point on the center line
    Point q = a.center + (a.radius / d) * (b.center - a.center);
    return KPoints{{q}};
  }
  if (d <= b.radius - a.radius) return a;  // a inside b
  if (d <= a.radius - b.radius) return b;
  const double t = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double hh2 = a.radius * a.radius - t * t;
  Point u = (1.0 / d) * (b.center - a.center);
  Point base = a.center + t * u;
  if (hh2 <= 0.0) {
    // internal tangency degenerates to the touch point
    return KPoints{{base}};
  }
  const double hh = std::sqrt(hh2);
  Point perp{-u.y, u.x};
  KLens lens;
  lens.d1 = a;
  lens.d2 = b;
  lens.corner0 = base + hh * perp;
  lens.corner1 = base + (-hh) * perp;
  lens.anchor = base;
  return lens;
}

bool lens_contains(const KLens& l, const Point& p) {
  return disk_contains(l.d1, p) && disk_contains(l.d2, p);
}

double lens_dist(const KLens& l, const Point& p) {
  if (lens_contains(l, p)) return 0.0;
  double best = std::min(dist(p, l.corner0), dist(p, l.corner1));
  const double r1 = dist(p, l.d1.center);
  if (r1 > l.d1.radius && r1 > 0.0) {
    Point q = l.d1.center + (l.d1.radius / r1) * (p - l.d1.center);
    if (disk_contains(l.d2, q)) best = std::min(best, dist(p, q));
  }
  const double r2 = dist(p, l.d2.center);
  if (r2 > l.d2.radius && r2 > 0.0) {
    Point q = l.d2.center + (l.d2.radius / r2) * (p - l.d2.center);
    if (disk_contains(l.d1, q)) best = std::min(best, dist(p, q));
  }
  return best;
}

void collect(const RegionSpec& r, std::vector<KPart>& out);

void collect_intersection(const IntersectionNode& n, std::vector<KPart>& out) {
  std::vector<KDisk> disks;
  for (const auto& a : n.args) {
    if (const Disk* d = std::get_if<Disk>(&a.node))
      disks.push_back(KDisk{d->center, d->radius});
    else
      fail(ErrorKind::indeterminate,
           "compact intersection supports only two disks");
  }
  if (disks.size() != 2)
    fail(ErrorKind::indeterminate,
         "compact intersection supports only two disks");
  out.push_back(intersect_disks(disks[0], disks[1]));
}

void collect(const RegionSpec& r, std::vector<KPart>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk>) {
          out.push_back(KDisk{n.center, n.radius});
        } else if constexpr (std::is_same_v<T, Segment>) {
          out.push_back(KSegment{n.a, n.b});
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          out.push_back(KPoints{n.punctures});
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          for (const auto& a : n.args) collect(a, out);
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          collect_intersection(n, out);
        } else {
          fail(ErrorKind::structural,
               "region node does not describe a compact set");
        }
      },
      r.node);
}

}  // namespace

CompactSet CompactSet::from_region(const RegionSpec& r) {
  CompactSet k;
  std::vector<KPart> raw;
  collect(r, raw);
  // drop empty pieces, dedupe loose points against everything else
  std::vector<Point> loose;
  for (auto& part : raw) {
    if (KPoints* pp = std::get_if<KPoints>(&part)) {
      for (const auto& q : pp->pts) loose.push_back(q);
    } else {
      k.parts_.push_back(std::move(part));
    }
  }
  KPoints kept;
  for (const auto& q : loose) {
    bool dup = false;
    for (const auto& w : kept.pts) dup = dup || (w == q);
    for (const auto& part : k.parts_) {
      dup = dup || std::visit(
                       [&](const auto& n) {
                         using T = std::decay_t<decltype(n)>;
                         if constexpr (std::is_same_v<T, KDisk>)
                           return disk_contains(n, q);
                         else if constexpr (std::is_same_v<T, KSegment>)
                           return segment_dist(q, n.a, n.b) == 0.0;
                         else if constexpr (std::is_same_v<T, KLens>)
                           return lens_contains(n, q);
                         else
                           return false;
                       },
                       part);
    }
    if (!dup) kept.pts.push_back(q);
  }
  if (!kept.pts.empty()) k.parts_.push_back(std::move(kept));
  return k;
}

bool CompactSet::contains(const Point& p) const {
  for (const auto& part : parts_) {
    bool in = std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>) return disk_contains(n, p);
          else if constexpr (std::is_same_v<T, KSegment>)
            return segment_dist(p, n.a, n.b) == 0.0;
          else if constexpr (std::is_same_v<T, KPoints>) {
            for (const auto& q : n.pts)
              if (q == p) return true;
            return false;
          } else
            return lens_contains(n, p);
        },
        part);
    if (in) return true;
  }
  return false;
}

double CompactSet::dist(const Point& p) const {
  double best = kInf;
  for (const auto& part : parts_) {
    double d = std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>)
            return std::max(0.0, poincare::dist(p, n.center) - n.radius);
          else if constexpr (std::is_same_v<T, KSegment>)
            return segment_dist(p, n.a, n.b);
          else if constexpr (std::is_same_v<T, KPoints>) {
            double m = kInf;
            for (const auto& q : n.pts) m = std::min(m, poincare::dist(p, q));
            return m;
          } else
            return lens_dist(n, p);
        },
        part);
    best = std::min(best, d);
  }
  return best;
}

double CompactSet::depth(const Point& p) const {
  double best = 0.0;
  for (const auto& part : parts_) {
    double d = std::visit(
        [&](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>) return disk_depth(n, p);
          else if constexpr (std::is_same_v<T, KLens>)
            return std::min(disk_depth(n.d1, p), disk_depth(n.d2, p));
          else
            return 0.0;
        },
        part);
    best = std::max(best, d);
  }
  return best;
}

int CompactSet::point_class() const {
  long count = 0;
  for (const auto& part : parts_) {
    if (std::holds_alternative<KDisk>(part) ||
        std::holds_alternative<KSegment>(part) ||
        std::holds_alternative<KLens>(part))
      return 3;
    count += static_cast<long>(std::get<KPoints>(part).pts.size());
  }
  return static_cast<int>(std::min<long>(count, 3));
}

double CompactSet::bounding_radius() const {
  double best = 0.0;
  for (const auto& part : parts_) {
    double b = std::visit(
        [&](const auto& n) -> double {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>) return norm(n.center) + n.radius;
          else if constexpr (std::is_same_v<T, KSegment>)
            return std::max(norm(n.a), norm(n.b));
          else if constexpr (std::is_same_v<T, KPoints>) {
            double m = 0.0;
            for (const auto& q : n.pts) m = std::max(m, norm(q));
            return m;
          } else
            return std::min(norm(n.d1.center) + n.d1.radius,
                            norm(n.d2.center) + n.d2.radius);
        },
        part);
    best = std::max(best, b);
  }
  return best;
}

Point CompactSet::inner_anchor() const {
  if (parts_.empty()) fail(ErrorKind::domain, "anchor of an empty compact set");
  // prefer a part with interior
  for (const auto& part : parts_) {
    if (const KDisk* d = std::get_if<KDisk>(&part)) return d->center;
    if (const KLens* l = std::get_if<KLens>(&part)) return l->anchor;
  }
  for (const auto& part : parts_) {
    if (const KSegment* s = std::get_if<KSegment>(&part))
      return 0.5 * (s->a + s->b);
  }
  return std::get<KPoints>(parts_.front()).pts.front();
}

OriginKind CompactSet::origin_kind() const {
  const Point origin{0.0, 0.0};
  if (!contains(origin)) return OriginKind::not_in_set;
  if (depth(origin) > 0.0) return OriginKind::interior;
  for (const auto& part : parts_) {
    bool curve = std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>) return disk_contains(n, origin);
          else if constexpr (std::is_same_v<T, KSegment>)
            return segment_dist(origin, n.a, n.b) == 0.0;
          else if constexpr (std::is_same_v<T, KLens>)
            return lens_contains(n, origin);
          else
            return false;
        },
        part);
    if (curve) return OriginKind::curve_boundary;
  }
  return OriginKind::isolated_point;
}

CompactSet CompactSet::translated(const Point& shift) const {
  CompactSet k;
  for (const auto& part : parts_) {
    k.parts_.push_back(std::visit(
        [&](const auto& n) -> KPart {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, KDisk>)
            return KDisk{n.center + shift, n.radius};
          else if constexpr (std::is_same_v<T, KSegment>)
            return KSegment{n.a + shift, n.b + shift};
          else if constexpr (std::is_same_v<T, KPoints>) {
            KPoints out;
            for (const auto& q : n.pts) out.pts.push_back(q + shift);
            return out;
          } else {
            KLens out = n;
            out.d1.center = n.d1.center + shift;
            out.d2.center = n.d2.center + shift;
            out.corner0 = n.corner0 + shift;
            out.corner1 = n.corner1 + shift;
            out.anchor = n.anchor + shift;
            return out;
          }
        },
        part));
  }
  return k;
}

}  // namespace poincare
