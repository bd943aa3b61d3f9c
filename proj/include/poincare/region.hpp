#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "poincare/point.hpp"

namespace poincare {

// Open plane domains assembled from primitives by union, intersection and
// sphere complement. Membership is open by convention; complement is taken
// against the closure of its argument so composite sets stay open.

struct RegionSpec;

struct Disk {
  Point center;
  double radius = 1.0;
};

struct HalfPlane {
  Point anchor;
  Point inward_normal;  // unit length, enforced by make_halfplane and the parser
};

struct DiskComplement {  // exterior of a closed disk, contains infinity
  Point center;
  double radius = 1.0;
};

struct PuncturedPlane {  // plane minus a finite point set, does not contain infinity
  std::vector<Point> punctures;
};

struct FullPlane {};

struct Segment {  // degenerate rectangle of half-width zero; empty interior
  Point a;
  Point b;
};

struct UnionNode {
  std::vector<RegionSpec> args;
};

struct IntersectionNode {
  std::vector<RegionSpec> args;
};

struct ComplementNode {
  std::vector<RegionSpec> arg;  // exactly one entry
};

struct RegionSpec {
  std::variant<Disk, HalfPlane, DiskComplement, PuncturedPlane, FullPlane, Segment,
               UnionNode, IntersectionNode, ComplementNode>
      node;
};

HalfPlane make_halfplane(Point anchor, Point normal);

RegionSpec region_union(std::vector<RegionSpec> args);
RegionSpec region_intersection(std::vector<RegionSpec> args);
RegionSpec region_complement(RegionSpec arg);

// open membership of the finite point p
bool contains(const RegionSpec& r, Point p);
// membership in the closure
bool contains_closed(const RegionSpec& r, Point p);

// membership of the point at infinity (open / in the closure)
bool contains_inf(const RegionSpec& r);
bool contains_inf_closed(const RegionSpec& r);

// Signed clearance to the curve boundary: positive inside, negative outside,
// combined max over unions, min over intersections, negated by complement.
// Inside a region the value is a lower bound on the true boundary distance,
// exact when the nearest boundary point lies on a single primitive.
// Punctures are not part of the curve signal; see puncture_distance.
double curve_clearance(const RegionSpec& r, Point p);

// distance to the nearest puncture point that is genuine boundary (+inf if none)
double puncture_distance(const RegionSpec& r, Point p);

// lower bound on the distance from p to the boundary of the membership set
double distance_to_boundary(const RegionSpec& r, Point p);

// puncture points of the region that are actual boundary (not absorbed by a union)
std::vector<Point> region_punctures(const RegionSpec& r);

// R such that the region is contained in the closed disk of radius R about 0
std::optional<double> bounding_radius(const RegionSpec& r);
// R such that the region contains { |z| > R }
std::optional<double> cobounding_radius(const RegionSpec& r);

// A handful of interior points with positive boundary clearance, for
// sampling-based checks. May be empty for thin or empty membership sets.
std::vector<Point> interior_probes(const RegionSpec& r);

// Points strictly outside the closure with positive clearance, best first.
// Empty when the complement has no interior (slits, punctures).
std::vector<Point> exterior_probes(const RegionSpec& r);

// True when the sphere complement of the region has at least three points.
// Decided by sound witness search over the primitive algebra; throws an
// indeterminate error when neither direction can be certified.
bool is_hyperbolic(const RegionSpec& r);

}  // namespace poincare
