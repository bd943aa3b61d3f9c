#include "poincare/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "poincare/errors.hpp"

namespace poincare {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

HalfPlane make_halfplane(Point anchor, Point normal) {
  double n = norm(normal);
  if (!(n > 0.0) || !std::isfinite(n))
    fail(ErrorKind::structural, "halfplane normal must be nonzero and finite");
  return HalfPlane{anchor, {normal.x / n, normal.y / n}};
}

RegionSpec region_union(std::vector<RegionSpec> args) {
  if (args.empty()) fail(ErrorKind::structural, "union needs at least one argument");
  return RegionSpec{UnionNode{std::move(args)}};
}

RegionSpec region_intersection(std::vector<RegionSpec> args) {
  if (args.empty()) fail(ErrorKind::structural, "intersection needs at least one argument");
  return RegionSpec{IntersectionNode{std::move(args)}};
}

RegionSpec region_complement(RegionSpec arg) {
  std::vector<RegionSpec> v;
  v.push_back(std::move(arg));
  return RegionSpec{ComplementNode{std::move(v)}};
}

bool contains(const RegionSpec& r, Point p) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return dist(p, n.center) < n.radius;
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return dot(p - n.anchor, n.inward_normal) > 0.0;
        } else if constexpr (std::is_same_v<T, DiskComplement>) {
          return dist(p, n.center) > n.radius;
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          for (const Point& q : n.punctures)
            if (p == q) return false;
          return true;
        } else if constexpr (std::is_same_v<T, FullPlane>) {
          return true;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return false;  // empty interior
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          for (const auto& a : n.args)
            if (contains(a, p)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          for (const auto& a : n.args)
            if (!contains(a, p)) return false;
          return true;
        } else {
          return !contains_closed(n.arg.front(), p);
        }
      },
      r.node);
}

bool contains_closed(const RegionSpec& r, Point p) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return dist(p, n.center) <= n.radius;
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return dot(p - n.anchor, n.inward_normal) >= 0.0;
        } else if constexpr (std::is_same_v<T, DiskComplement>) {
          return dist(p, n.center) >= n.radius;
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return true;  // closure restores the punctures
        } else if constexpr (std::is_same_v<T, FullPlane>) {
          return true;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return segment_dist(p, n.a, n.b) <= 1e-12 * (1.0 + norm(p));
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          for (const auto& a : n.args)
            if (contains_closed(a, p)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          // superset of the true closure; exact for the regular sets used here
          for (const auto& a : n.args)
            if (!contains_closed(a, p)) return false;
          return true;
        } else {
          return !contains(n.arg.front(), p);
        }
      },
      r.node);
}

bool contains_inf(const RegionSpec& r) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DiskComplement>) {
          return true;
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          for (const auto& a : n.args)
            if (contains_inf(a)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          for (const auto& a : n.args)
            if (!contains_inf(a)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return !contains_inf_closed(n.arg.front());
        } else {
          return false;
        }
      },
      r.node);
}

bool contains_inf_closed(const RegionSpec& r) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, Segment>) {
          return false;
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          for (const auto& a : n.args)
            if (contains_inf_closed(a)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          for (const auto& a : n.args)
            if (!contains_inf_closed(a)) return false;
          return true;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return !contains_inf(n.arg.front());
        } else {
          return true;  // halfplane, disk complement, punctured plane, full plane
        }
      },
      r.node);
}

double curve_clearance(const RegionSpec& r, Point p) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return n.radius - dist(p, n.center);
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          return dot(p - n.anchor, n.inward_normal);
        } else if constexpr (std::is_same_v<T, DiskComplement>) {
          return dist(p, n.center) - n.radius;
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return kInf;  // punctures carry no curve signal
        } else if constexpr (std::is_same_v<T, FullPlane>) {
          return kInf;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return -segment_dist(p, n.a, n.b);
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          double s = -kInf;
          for (const auto& a : n.args) s = std::max(s, curve_clearance(a, p));
          return s;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          double s = kInf;
          for (const auto& a : n.args) s = std::min(s, curve_clearance(a, p));
          return s;
        } else {
          return -curve_clearance(n.arg.front(), p);
        }
      },
      r.node);
}

double puncture_distance(const RegionSpec& r, Point p) {
  double d = kInf;
  for (const Point& q : region_punctures(r)) d = std::min(d, dist(p, q));
  return d;
}

double distance_to_boundary(const RegionSpec& r, Point p) {
  return std::min(std::fabs(curve_clearance(r, p)), puncture_distance(r, p));
}

namespace {
void collect_punctures(const RegionSpec& r, std::vector<Point>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PuncturedPlane>) {
          out.insert(out.end(), n.punctures.begin(), n.punctures.end());
        } else if constexpr (std::is_same_v<T, UnionNode> || std::is_same_v<T, IntersectionNode>) {
          for (const auto& a : n.args) collect_punctures(a, out);
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          collect_punctures(n.arg.front(), out);
        }
      },
      r.node);
}
}  // namespace

std::vector<Point> region_punctures(const RegionSpec& r) {
  std::vector<Point> cand;
  collect_punctures(r, cand);
  std::vector<Point> out;
  for (const Point& q : cand) {
    // genuine boundary only: the point itself must be excluded from the region
    if (!contains(r, q)) {
      bool dup = false;
      for (const Point& s : out)
        if (s == q) dup = true;
      if (!dup) out.push_back(q);
    }
  }
  return out;
}

std::optional<double> bounding_radius(const RegionSpec& r) {
  return std::visit(
      [&](const auto& n) -> std::optional<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk>) {
          return norm(n.center) + n.radius;
        } else if constexpr (std::is_same_v<T, Segment>) {
          return std::max(norm(n.a), norm(n.b));
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          double m = 0.0;
          for (const auto& a : n.args) {
            auto b = bounding_radius(a);
            if (!b) return std::nullopt;
            m = std::max(m, *b);
          }
          return m;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          std::optional<double> m;
          for (const auto& a : n.args) {
            auto b = bounding_radius(a);
            if (b) m = m ? std::min(*m, *b) : *b;
          }
          return m;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return cobounding_radius(n.arg.front());
        } else {
          return std::nullopt;
        }
      },
      r.node);
}

std::optional<double> cobounding_radius(const RegionSpec& r) {
  return std::visit(
      [&](const auto& n) -> std::optional<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, DiskComplement>) {
          return norm(n.center) + n.radius;
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          double m = 0.0;
          for (const Point& q : n.punctures) m = std::max(m, norm(q));
          return m + 1.0;
        } else if constexpr (std::is_same_v<T, FullPlane>) {
          return 0.0;
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          std::optional<double> m;
          for (const auto& a : n.args) {
            auto b = cobounding_radius(a);
            if (b) m = m ? std::min(*m, *b) : *b;
          }
          return m;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          double m = 0.0;
          for (const auto& a : n.args) {
            auto b = cobounding_radius(a);
            if (!b) return std::nullopt;
            m = std::max(m, *b);
          }
          return m;
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          return bounding_radius(n.arg.front());
        } else {
          return std::nullopt;
        }
      },
      r.node);
}

namespace {

// Known finite sphere complement, when one exists. The bool marks whether the
// point at infinity belongs to the complement.
struct FiniteComplement {
  std::vector<Point> finite;
  bool has_inf = false;
  int count() const { return static_cast<int>(finite.size()) + (has_inf ? 1 : 0); }
};

std::optional<FiniteComplement> finite_complement(const RegionSpec& r) {
  using R = std::optional<FiniteComplement>;
  return std::visit(
      [&](const auto& n) -> R {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, PuncturedPlane>) {
          return FiniteComplement{n.punctures, true};
        } else if constexpr (std::is_same_v<T, FullPlane>) {
          return FiniteComplement{{}, true};
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          // complement of a union is the intersection of complements; a single
          // finite factor bounds it, then membership tests settle each point
          for (size_t k = 0; k < n.args.size(); ++k) {
            auto f = finite_complement(n.args[k]);
            if (!f) continue;
            FiniteComplement out;
            for (const Point& q : f->finite)
              if (!contains(r, q)) out.finite.push_back(q);
            out.has_inf = f->has_inf && !contains_inf(r);
            return out;
          }
          return std::nullopt;
        } else {
          return std::nullopt;
        }
      },
      r.node);
}

void collect_witness_candidates(const RegionSpec& r, std::vector<Point>& out) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, DiskComplement>) {
          out.push_back(n.center);
          for (int k = 0; k < 8; ++k) {
            double th = 0.25 * 3.14159265358979323846 * k;
            for (double t : {1.0, 2.0, 0.5})
              out.push_back({n.center.x + t * n.radius * std::cos(th),
                             n.center.y + t * n.radius * std::sin(th)});
          }
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          for (double t : {0.5, 1.0, 2.0, 4.0}) {
            out.push_back(n.anchor - t * n.inward_normal);
            out.push_back(n.anchor + t * n.inward_normal);
            Point tang{-n.inward_normal.y, n.inward_normal.x};
            out.push_back(n.anchor + t * tang - t * n.inward_normal);
          }
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          for (const Point& q : n.punctures) out.push_back(q);
        } else if constexpr (std::is_same_v<T, Segment>) {
          out.push_back(n.a);
          out.push_back(n.b);
          out.push_back(n.a + 0.5 * (n.b - n.a));
        } else if constexpr (std::is_same_v<T, UnionNode> || std::is_same_v<T, IntersectionNode>) {
          for (const auto& a : n.args) collect_witness_candidates(a, out);
        } else if constexpr (std::is_same_v<T, ComplementNode>) {
          collect_witness_candidates(n.arg.front(), out);
        }
      },
      r.node);
}

}  // namespace

std::vector<Point> interior_probes(const RegionSpec& r) {
  std::vector<Point> cand;
  collect_witness_candidates(r, cand);
  for (double t : {0.25, 0.75, 1.5, 3.0, 11.0})
    for (int k = 0; k < 8; ++k) {
      double th = 0.25 * 3.14159265358979323846 * k + 0.371;
      cand.push_back({t * std::cos(th), t * std::sin(th)});
    }
  std::vector<Point> out;
  for (const Point& q : cand) {
    if (!contains(r, q)) continue;
    if (!(distance_to_boundary(r, q) > 1e-9 * (1.0 + norm(q)))) continue;
    bool dup = false;
    for (const Point& s : out)
      if (dist(s, q) < 1e-9) dup = true;
    if (!dup) out.push_back(q);
    if (out.size() >= 12) break;
  }
  return out;
}

std::vector<Point> exterior_probes(const RegionSpec& r) {
  std::vector<Point> cand;
  collect_witness_candidates(r, cand);
  for (double t : {0.25, 0.75, 1.5, 3.0, 11.0})
    for (int k = 0; k < 8; ++k) {
      double th = 0.25 * 3.14159265358979323846 * k + 0.371;
      cand.push_back({t * std::cos(th), t * std::sin(th)});
    }
  std::vector<Point> out;
  std::vector<double> depth;
  for (const Point& q : cand) {
    if (contains_closed(r, q)) continue;
    double d = -curve_clearance(r, q);
    if (!(d > 1e-9 * (1.0 + norm(q)))) continue;
    bool dup = false;
    for (const Point& s : out)
      if (dist(s, q) < 1e-9) dup = true;
    if (dup) continue;
    out.push_back(q);
    depth.push_back(d);
  }
  // deepest first
  for (size_t a = 0; a < out.size(); ++a)
    for (size_t b = a + 1; b < out.size(); ++b)
      if (depth[b] > depth[a]) {
        std::swap(depth[a], depth[b]);
        std::swap(out[a], out[b]);
      }
  return out;
}

bool is_hyperbolic(const RegionSpec& r) {
  if (auto f = finite_complement(r)) return f->count() >= 3;

  // certify >= 3 complement points by explicit witnesses
  std::vector<Point> cand;
  collect_witness_candidates(r, cand);
  for (double t : {3.0, 7.0, 19.0, 53.0})
    for (int k = 0; k < 8; ++k) {
      double th = 0.25 * 3.14159265358979323846 * k + 0.123;
      cand.push_back({t * std::cos(th), t * std::sin(th)});
    }
  std::vector<Point> witnesses;
  for (const Point& q : cand) {
    if (contains(r, q)) continue;
    bool dup = false;
    for (const Point& s : witnesses)
      if (dist(s, q) < 1e-12) dup = true;
    if (!dup) witnesses.push_back(q);
    if (witnesses.size() + (contains_inf(r) ? 0u : 1u) >= 3u && witnesses.size() >= 2u) break;
  }
  int found = static_cast<int>(witnesses.size()) + (contains_inf(r) ? 0 : 1);
  if (found >= 3) return true;

  fail(ErrorKind::indeterminate,
       "cannot certify hyperbolicity for this combination; sphere complement "
       "size is undetermined");
}

}  // namespace poincare
