#pragma once

#include <variant>
#include <vector>

#include "poincare/region.hpp"

namespace poincare {

// Compact plane sets for the capacity solver. Built from the region grammar
// with a restricted vocabulary: disk (closed), segment, punctures (read as a
// finite point set here, not as a domain), union of those, and the
// intersection of two disks. Everything else is rejected.

struct KDisk {
  Point center;
  double radius;
};

struct KSegment {
  Point a, b;
};

struct KPoints {
  std::vector<Point> pts;  // distinct
};

// Nonempty intersection of two closed disks with interior. corner[01] are the
// circle crossing points, anchor is the deepest point on the center line.
struct KLens {
  KDisk d1, d2;
  Point corner0, corner1;
  Point anchor;
};

using KPart = std::variant<KDisk, KSegment, KPoints, KLens>;

enum class OriginKind { not_in_set, interior, curve_boundary, isolated_point };

class CompactSet {
 public:
  static CompactSet from_region(const RegionSpec& r);

  const std::vector<KPart>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  bool contains(const Point& p) const;   // closed membership
  double dist(const Point& p) const;     // 0 on the set
  // Lower bound for the distance from p to the complement; 0 unless p is
  // interior to some part.
  double depth(const Point& p) const;

  // 0, 1, 2 exact counts; 3 means three or more points (any continuum part
  // counts as 3).
  int point_class() const;
  double bounding_radius() const;
  Point inner_anchor() const;  // a point of the set, deepest available
  OriginKind origin_kind() const;

  CompactSet translated(const Point& shift) const;

 private:
  std::vector<KPart> parts_;
};

}  // namespace poincare
