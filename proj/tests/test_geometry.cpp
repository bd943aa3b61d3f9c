#include <doctest.h>

#include <cmath>

#include "poincare/errors.hpp"
#include "poincare/region.hpp"

using namespace poincare;

namespace {
RegionSpec disk(double cx, double cy, double r) { return RegionSpec{Disk{{cx, cy}, r}}; }
RegionSpec hp(double ax, double ay, double nx, double ny) {
  return RegionSpec{make_halfplane({ax, ay}, {nx, ny})};
}
}  // namespace

TEST_CASE("disk membership and clearance") {
  auto d = disk(0.3, 0.4, 0.25);
  CHECK(contains(d, {0.3, 0.4}));
  CHECK(contains(d, {0.5, 0.4}));
  CHECK_FALSE(contains(d, {0.55, 0.4}));      // boundary point
  CHECK(contains_closed(d, {0.55, 0.4}));
  CHECK_FALSE(contains_closed(d, {0.56, 0.4}));
  CHECK(curve_clearance(d, {0.3, 0.4}) == doctest::Approx(0.25).epsilon(1e-15));
  CHECK(curve_clearance(d, {0.6, 0.4}) == doctest::Approx(-0.05).epsilon(1e-12));
  CHECK_FALSE(contains_inf(d));
}

TEST_CASE("halfplane clearance is the signed normal offset") {
  auto h = hp(1.0, 0.0, -2.0, 0.0);  // x < 1, normal normalized by make_halfplane
  CHECK(contains(h, {0.0, 5.0}));
  CHECK_FALSE(contains(h, {1.0, 0.0}));
  CHECK(contains_closed(h, {1.0, 0.0}));
  CHECK(curve_clearance(h, {-1.0, 3.0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(curve_clearance(h, {2.0, 0.0}) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK_FALSE(contains_inf(h));
  CHECK(contains_inf_closed(h));
}

TEST_CASE("disk complement holds infinity") {
  RegionSpec e{DiskComplement{{0, 0}, 2.0}};
  CHECK(contains(e, {3.0, 0.0}));
  CHECK_FALSE(contains(e, {0.0, 0.0}));
  CHECK_FALSE(contains(e, {2.0, 0.0}));
  CHECK(contains_inf(e));
  CHECK(curve_clearance(e, {5.0, 0.0}) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("segment has empty interior and exact outside distance") {
  RegionSpec s{Segment{{-0.5, 0.0}, {0.5, 0.0}}};
  CHECK_FALSE(contains(s, {0.0, 0.0}));
  CHECK(contains_closed(s, {0.0, 0.0}));
  CHECK(curve_clearance(s, {0.0, 0.3}) == doctest::Approx(-0.3).epsilon(1e-15));
  CHECK(curve_clearance(s, {1.5, 0.0}) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(segment_dist({2.0, 1.0}, {-0.5, 0.0}, {0.5, 0.0}) ==
        doctest::Approx(std::sqrt(1.5 * 1.5 + 1.0)).epsilon(1e-15));
}

TEST_CASE("csg clearance follows min and max") {
  auto lens = region_intersection({disk(-0.5, 0, 1), disk(0.5, 0, 1)});
  CHECK(contains(lens, {0.0, 0.0}));
  CHECK_FALSE(contains(lens, {0.6, 0.0}));
  CHECK(curve_clearance(lens, {0.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));

  auto pair = region_union({disk(-0.5, 0, 1), disk(0.5, 0, 1)});
  CHECK(contains(pair, {1.2, 0.0}));
  CHECK(curve_clearance(pair, {0.5, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));

  auto outside = region_complement(disk(0, 0, 1));
  CHECK_FALSE(contains(outside, {1.0, 0.0}));  // boundary excluded both sides
  CHECK(contains(outside, {2.0, 0.0}));
  CHECK(contains_inf(outside));
  CHECK(curve_clearance(outside, {3.0, 0.0}) == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("clearance sign matches membership away from the boundary") {
  auto combo = region_union(
      {region_intersection({disk(-0.5, 0, 1), disk(0.5, 0, 1)}), disk(2.0, 0.0, 0.5)});
  for (double x = -2.0; x <= 3.0; x += 0.17) {
    for (double y = -1.5; y <= 1.5; y += 0.13) {
      Point p{x, y};
      double c = curve_clearance(combo, p);
      if (std::abs(c) < 1e-9) continue;
      CHECK(contains(combo, p) == (c > 0.0));
    }
  }
}

TEST_CASE("punctures are boundary, not curve") {
  auto pd = region_intersection(
      {disk(0, 0, 1), RegionSpec{PuncturedPlane{{Point{0, 0}}}}});
  CHECK_FALSE(contains(pd, {0.0, 0.0}));
  CHECK(contains(pd, {0.5, 0.0}));
  CHECK(curve_clearance(pd, {0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(puncture_distance(pd, {0.5, 0.0}) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(distance_to_boundary(pd, {0.9, 0.0}) == doctest::Approx(0.1).epsilon(1e-12));
  auto pts = region_punctures(pd);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0] == Point{0, 0});
}

TEST_CASE("a puncture swallowed by another part is not boundary") {
  auto r = region_union({disk(0, 0, 1), RegionSpec{PuncturedPlane{{Point{0, 0}}}}});
  CHECK(contains(r, {0.0, 0.0}));
  CHECK(region_punctures(r).empty());
  CHECK(puncture_distance(r, {0.1, 0.0}) > 1e100);
}

TEST_CASE("bounding radii") {
  auto d = disk(1.0, 0.0, 2.0);
  auto bd = bounding_radius(d);
  REQUIRE(bd.has_value());
  CHECK(*bd == doctest::Approx(3.0).epsilon(1e-15));
  CHECK_FALSE(bounding_radius(hp(0, 0, 0, 1)).has_value());

  RegionSpec e{DiskComplement{{1, 0}, 2.0}};
  auto cb = cobounding_radius(e);
  REQUIRE(cb.has_value());
  CHECK(*cb >= 3.0);
  CHECK_FALSE(cobounding_radius(d).has_value());
}

TEST_CASE("interior and exterior probes land on the right side") {
  auto lens = region_intersection({disk(-0.5, 0, 1), disk(0.5, 0, 1)});
  auto in = interior_probes(lens);
  REQUIRE_FALSE(in.empty());
  for (const Point& p : in) {
    CHECK(contains(lens, p));
    CHECK(distance_to_boundary(lens, p) > 0.0);
  }
  auto out = exterior_probes(lens);
  REQUIRE_FALSE(out.empty());
  for (const Point& p : out) CHECK_FALSE(contains_closed(lens, p));
}

TEST_CASE("hyperbolicity screen") {
  CHECK(is_hyperbolic(disk(0, 0, 1)));
  CHECK(is_hyperbolic(hp(0, 0, 0, 1)));
  // two finite punctures plus infinity give three sphere complement points
  CHECK(is_hyperbolic(RegionSpec{PuncturedPlane{{Point{0, 0}, Point{1, 0}}}}));
  CHECK_FALSE(is_hyperbolic(RegionSpec{PuncturedPlane{{Point{0, 0}}}}));
  CHECK_FALSE(is_hyperbolic(RegionSpec{FullPlane{}}));
}
