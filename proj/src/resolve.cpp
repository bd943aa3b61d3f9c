#include "poincare/resolve.hpp"

#include <cmath>

#include "poincare/errors.hpp"

namespace poincare {

namespace {

const double kPi = 3.14159265358979323846;

bool near_pt(const Point& p, const Point& q) {
  return dist(p, q) <= 1e-13 * (1.0 + norm(p) + norm(q));
}

// Rewrite complements of primitives into primitives and flatten same-kind
// nesting so pattern matching sees a shallow tree.
RegionSpec normalize(const RegionSpec& r) {
  return std::visit(
      [&](const auto& n) -> RegionSpec {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, UnionNode> || std::is_same_v<T, IntersectionNode>) {
          std::vector<RegionSpec> flat;
          for (const auto& a : n.args) {
            RegionSpec na = normalize(a);
            if (auto* same = std::get_if<T>(&na.node))
              for (auto& x : same->args) flat.push_back(std::move(x));
            else
              flat.push_back(std::move(na));
          }
          if (flat.size() == 1) return flat.front();
          T out;
          out.args = std::move(flat);
          return RegionSpec{std::move(out)};
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          RegionSpec inner = normalize(n.arg.front());
          if (auto* d = std::get_if<Disk>(&inner.node))
            return RegionSpec{DiskComplement{d->center, d->radius}};
          if (auto* dc = std::get_if<DiskComplement>(&inner.node))
            return RegionSpec{Disk{dc->center, dc->radius}};
          if (auto* hp = std::get_if<HalfPlane>(&inner.node))
            return RegionSpec{make_halfplane(hp->anchor, -1.0 * hp->inward_normal)};
          ComplementNode out;
          out.arg.push_back(std::move(inner));
          return RegionSpec{std::move(out)};
        } else {
          return r;
        }
      },
      r.node);
}

struct LinePair {
  Point vertex;
  double delta;     // angle between the normals, in (0, pi)
  Point bisector;   // unit
};

std::optional<LinePair> crossing(const HalfPlane& h1, const HalfPlane& h2) {
  const Point n1 = h1.inward_normal, n2 = h2.inward_normal;
  const double cr = cross(n1, n2), dt = dot(n1, n2);
  if (std::abs(cr) <= 1e-14) return std::nullopt;  // parallel
  const double b1 = dot(n1, h1.anchor), b2 = dot(n2, h2.anchor);
  const double det = cr;
  Point v{(b1 * n2.y - b2 * n1.y) / det, (n1.x * b2 - n2.x * b1) / det};
  Point bis = n1 + n2;
  bis = (1.0 / norm(bis)) * bis;
  return LinePair{v, std::atan2(std::abs(cr), dt), bis};
}

std::optional<MetricEval> resolve_pair_intersection(const RegionSpec& a,
                                                    const RegionSpec& b);

std::optional<MetricEval> resolve_halfplane_pair(const HalfPlane& h1,
                                                 const HalfPlane& h2,
                                                 bool is_union) {
  if (auto lp = crossing(h1, h2)) {
    double opening = is_union ? kPi + lp->delta : kPi - lp->delta;
    return metric_wedge(lp->vertex, opening, lp->bisector);
  }
  // parallel: offsets along the first normal
  const Point n = h1.inward_normal;
  if (dot(n, h2.inward_normal) > 0) {
    double c1 = dot(n, h1.anchor), c2 = dot(n, h2.anchor);
    const HalfPlane& deeper = (c1 >= c2) ? h1 : h2;
    const HalfPlane& wider = (c1 >= c2) ? h2 : h1;
    return metric_halfplane(is_union ? wider.anchor : deeper.anchor,
                            is_union ? wider.inward_normal : deeper.inward_normal);
  }
  return std::nullopt;  // opposite directions: strip or split plane
}

std::optional<MetricEval> resolve_disk_pair(const Disk& d1, const Disk& d2,
                                            bool is_union) {
  const double sep = dist(d1.center, d2.center);
  const double tol = 1e-13 * (1.0 + d1.radius + d2.radius);
  if (sep + d1.radius <= d2.radius + tol)
    return is_union ? metric_disk(d2.center, d2.radius)
                    : metric_disk(d1.center, d1.radius);
  if (sep + d2.radius <= d1.radius + tol)
    return is_union ? metric_disk(d1.center, d1.radius)
                    : metric_disk(d2.center, d2.radius);
  return std::nullopt;
}

std::optional<MetricEval> resolve_pair_intersection(const RegionSpec& a,
                                                    const RegionSpec& b) {
  const Disk* da = std::get_if<Disk>(&a.node);
  const Disk* db = std::get_if<Disk>(&b.node);
  const HalfPlane* ha = std::get_if<HalfPlane>(&a.node);
  const HalfPlane* hb = std::get_if<HalfPlane>(&b.node);
  const DiskComplement* ca = std::get_if<DiskComplement>(&a.node);
  const DiskComplement* cb = std::get_if<DiskComplement>(&b.node);
  const PuncturedPlane* pa = std::get_if<PuncturedPlane>(&a.node);
  const PuncturedPlane* pb = std::get_if<PuncturedPlane>(&b.node);

  if (da && db) return resolve_disk_pair(*da, *db, false);
  if (ha && hb) return resolve_halfplane_pair(*ha, *hb, false);

  // disk minus a point set
  if ((da && pb) || (db && pa)) {
    const Disk& d = da ? *da : *db;
    const PuncturedPlane& pp = da ? *pb : *pa;
    std::vector<Point> inside;
    for (const auto& q : pp.punctures)
      if (dist(q, d.center) < d.radius) inside.push_back(q);
    if (inside.empty()) return metric_disk(d.center, d.radius);
    if (inside.size() == 1 && near_pt(inside.front(), d.center))
      return metric_punctured_disk(d.center, d.radius);
    return std::nullopt;
  }

  // disk minus a smaller closed disk
  if ((da && cb) || (db && ca)) {
    const Disk& d = da ? *da : *db;
    const DiskComplement& c = da ? *cb : *ca;
    const double sep = dist(d.center, c.center);
    if (sep >= c.radius + d.radius) return metric_disk(d.center, d.radius);
    if (near_pt(d.center, c.center) && c.radius < d.radius)
      return metric_annulus(d.center, c.radius, d.radius);
    return std::nullopt;
  }

  return std::nullopt;
}

}  // namespace

std::optional<MetricEval> resolve_metric(const RegionSpec& region) {
  RegionSpec r = normalize(region);
  return std::visit(
      [&](const auto& n) -> std::optional<MetricEval> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return metric_disk(n.center, n.radius);
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return metric_halfplane(n.anchor, n.inward_normal);
        } else if constexpr (std::is_same_v<T, DiskComplement>) {
          return metric_exterior_disk(n.center, n.radius);
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          if (n.args.size() == 2)
            return resolve_pair_intersection(n.args[0], n.args[1]);
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          if (n.args.size() != 2) return std::nullopt;
          const HalfPlane* h1 = std::get_if<HalfPlane>(&n.args[0].node);
          const HalfPlane* h2 = std::get_if<HalfPlane>(&n.args[1].node);
          if (h1 && h2) return resolve_halfplane_pair(*h1, *h2, true);
          const Disk* d1 = std::get_if<Disk>(&n.args[0].node);
          const Disk* d2 = std::get_if<Disk>(&n.args[1].node);
          if (d1 && d2) return resolve_disk_pair(*d1, *d2, true);
          return std::nullopt;
        } else {
          return std::nullopt;
        }
      },
      r.node);
}

}  // namespace poincare
