#include <doctest.h>

#include <cmath>

#include "poincare/catalog.hpp"
#include "poincare/errors.hpp"
#include "poincare/region.hpp"
#include "poincare/resolve.hpp"

using namespace poincare;

namespace {
constexpr double kPi = 3.14159265358979323846;
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("sphere density") {
  auto m = metric_sphere();
  CHECK(m.lambda({0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m.lambda({1, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(m.curvature_sign == 1);
}

TEST_CASE("disk density") {
  auto m = metric_disk({0, 0}, 1.0);
  CHECK(m.lambda({0, 0}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m.lambda({0.5, 0}) == doctest::Approx(8.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(m.in_domain({1.0, 0.0}));
  CHECK_THROWS_AS(m.lambda({2.0, 0.0}), Error);

  auto off = metric_disk({0.3, 0.4}, 0.25);
  CHECK(off.lambda({0.3, 0.4}) == doctest::Approx(8.0).epsilon(1e-13));
}

TEST_CASE("halfplane density is one over the distance") {
  auto m = metric_halfplane({0, 0}, {0, 1});
  CHECK(m.lambda({7.0, 3.0}) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(m.in_domain({0.0, -1.0}));
}

TEST_CASE("exterior disk density") {
  auto m = metric_exterior_disk({0, 0}, 1.0);
  CHECK(m.lambda({std::sqrt(3.0), 0.0}) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(m.lambda({2.0, 0.0}) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK_FALSE(m.in_domain({0.5, 0.0}));
}

TEST_CASE("punctured disk density") {
  auto m = metric_punctured_disk({0, 0}, 1.0);
  double rho = std::exp(-1.0);
  CHECK(m.lambda({rho, 0.0}) == doctest::Approx(std::exp(1.0)).epsilon(1e-14));
  CHECK_FALSE(m.in_domain({0.0, 0.0}));  // the puncture itself
  CHECK(m.in_domain({0.5, 0.0}));
}

TEST_CASE("ring domain density") {
  auto m = metric_annulus({0, 0}, 1.0, std::exp(1.0));
  double rho = std::exp(0.5);
  CHECK(m.lambda({rho, 0.0}) == doctest::Approx(kPi / rho).epsilon(1e-14));
  CHECK_FALSE(m.in_domain({1.0, 0.0}));
  CHECK_FALSE(m.in_domain({0.5, 0.0}));
}

TEST_CASE("wedge density") {
  auto m = metric_wedge({0, 0}, kPi / 2.0, {kSqrt2 / 2.0, kSqrt2 / 2.0});
  CHECK(m.lambda({kSqrt2 / 2.0, kSqrt2 / 2.0}) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(m.in_domain({1.0, 0.5}));
  CHECK_FALSE(m.in_domain({1.0, -0.5}));
  CHECK_FALSE(m.in_domain({-1.0, 0.5}));

  // the quadrant density along the diagonal equals sqrt(1+t^2)/t at 1+it
  auto q = metric_wedge({0, 0}, kPi / 2.0, {kSqrt2 / 2.0, kSqrt2 / 2.0});
  double t = 0.25;
  CHECK(q.lambda({1.0, t}) == doctest::Approx(std::sqrt(1.0 + t * t) / t).epsilon(1e-13));
}

TEST_CASE("slit plane wedge accepts almost every direction") {
  auto m = metric_wedge({0, 0}, 2.0 * kPi, {-1.0, 0.0});  // slit along the positive axis
  CHECK(m.in_domain({-1.0, 0.0}));
  CHECK(m.in_domain({0.0, 1.0}));
  CHECK_FALSE(m.in_domain({1.0, 0.0}));  // on the slit
  // p = 1/2: density at -1 is (1/2)/sin(pi/2) = 1/2
  CHECK(m.lambda({-1.0, 0.0}) == doctest::Approx(0.5).epsilon(1e-13));
}

TEST_CASE("halfdisk density through a pullback") {
  RegionSpec halfdisk = region_intersection(
      {RegionSpec{Disk{{0, 0}, 1.0}}, RegionSpec{make_halfplane({0, 0}, {0, 1})}});
  auto map = map_compose({map_moebius(1, 1, -1, 1), map_power(2)});
  auto m = metric_pullback(metric_halfplane({0, 0}, {0, 1}), map, halfdisk, "halfdisk");
  CHECK(m.lambda({0.0, 0.5}) == doctest::Approx(10.0 / 3.0).epsilon(1e-13));
  CHECK_FALSE(m.in_domain({0.0, -0.5}));
}

TEST_CASE("map building blocks") {
  auto aff = map_affine(cplx(2.0, 0.0), cplx(0.0, 1.0));
  CHECK(std::abs(aff.f(cplx(1.0, 0.0)) - cplx(2.0, 1.0)) < 1e-15);
  CHECK(std::abs(aff.df(cplx(5.0, 5.0)) - cplx(2.0, 0.0)) < 1e-15);

  auto jk = map_joukowski();
  CHECK(std::abs(jk.f(cplx(2.0, 0.0)) - cplx(2.5, 0.0)) < 1e-15);
  CHECK(std::abs(jk.df(cplx(2.0, 0.0)) - cplx(0.75, 0.0)) < 1e-15);

  auto pw = map_power(0.5);
  auto v = pw.f(cplx(-4.0, 0.0));  // branch over [0, 2*pi): sqrt(-4) = 2i
  CHECK(std::abs(v - cplx(0.0, 2.0)) < 1e-13);

  auto mb = map_moebius(1, 1, -1, 1);
  CHECK(std::abs(mb.f(cplx(0.0, 0.5)) - cplx(0.6, 0.8)) < 1e-15);
}

TEST_CASE("defining equation residuals vanish for hyperbolic entries") {
  struct Case {
    MetricEval m;
    cplx at;
  };
  const Case cases[] = {
      {metric_disk({0, 0}, 1.0), {0.3, 0.1}},
      {metric_halfplane({0, 0}, {0, 1}), {0.2, 0.7}},
      {metric_exterior_disk({0, 0}, 1.0), {1.9, 0.3}},
      {metric_punctured_disk({0, 0}, 1.0), {0.31, 0.22}},
      {metric_annulus({0, 0}, 1.0, std::exp(1.0)), {1.7, 0.2}},
      {metric_wedge({0, 0}, kPi / 2.0, {kSqrt2 / 2.0, kSqrt2 / 2.0}), {0.9, 0.8}},
  };
  for (const Case& c : cases) {
    double lam = c.m.lambda(c.at);
    double res = curvature_residual(c.m, c.at, 1e-3);
    CHECK(std::abs(res) / (lam * lam) < 1e-4);
  }
}

TEST_CASE("sphere residual shows opposite curvature") {
  auto m = metric_sphere();
  CHECK(curvature_residual(m, {0, 0}, 1e-3) == doctest::Approx(-8.0).epsilon(1e-4));
}

TEST_CASE("boundary data values") {
  CHECK(band_value(0.01) == doctest::Approx(4.605170185988091).epsilon(1e-15));
  CHECK(ring_value(0.03) == doctest::Approx(2.2518461871554334).epsilon(1e-15));
  CHECK_THROWS_AS(band_value(0.0), Error);
  CHECK_THROWS_AS(ring_value(0.5), Error);
  CHECK_THROWS_AS(ring_value(-0.1), Error);
}

TEST_CASE("region resolution picks the right closed forms") {
  auto quad = region_intersection({RegionSpec{make_halfplane({0, 0}, {1, 0})},
                                   RegionSpec{make_halfplane({0, 0}, {0, 1})}});
  auto mq = resolve_metric(quad);
  REQUIRE(mq.has_value());
  CHECK(mq->lambda({1.0, 1.0}) == doctest::Approx(kSqrt2).epsilon(1e-13));

  auto couni = region_union({RegionSpec{make_halfplane({0, 0}, {1, 0})},
                             RegionSpec{make_halfplane({0, 0}, {0, 1})}});
  auto mu = resolve_metric(couni);
  REQUIRE(mu.has_value());
  CHECK(mu->lambda({1.0, 1.0}) == doctest::Approx(kSqrt2 / 3.0).epsilon(1e-13));

  auto nested = region_intersection({RegionSpec{Disk{{0, 0}, 1.0}},
                                     RegionSpec{Disk{{0, 0}, 2.0}}});
  auto mn = resolve_metric(nested);
  REQUIRE(mn.has_value());
  CHECK(mn->lambda({0, 0}) == doctest::Approx(2.0).epsilon(1e-15));

  auto pd = region_intersection({RegionSpec{Disk{{0, 0}, 1.0}},
                                 RegionSpec{PuncturedPlane{{Point{0, 0}}}}});
  auto mp = resolve_metric(pd);
  REQUIRE(mp.has_value());
  CHECK(mp->lambda({std::exp(-1.0), 0.0}) == doctest::Approx(std::exp(1.0)).epsilon(1e-13));

  auto ring = region_intersection({RegionSpec{Disk{{0, 0}, std::exp(1.0)}},
                                   RegionSpec{DiskComplement{{0, 0}, 1.0}}});
  auto mr = resolve_metric(ring);
  REQUIRE(mr.has_value());
  double rho = std::exp(0.5);
  CHECK(mr->lambda({rho, 0.0}) == doctest::Approx(kPi / rho).epsilon(1e-13));

  auto compl_disk = region_complement(RegionSpec{Disk{{0, 0}, 1.0}});
  auto mc = resolve_metric(compl_disk);
  REQUIRE(mc.has_value());
  CHECK(mc->lambda({2.0, 0.0}) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));

  // a lens has no closed form here
  auto lens = region_intersection({RegionSpec{Disk{{-0.5, 0}, 1.0}},
                                   RegionSpec{Disk{{0.5, 0}, 1.0}}});
  CHECK_FALSE(resolve_metric(lens).has_value());
}

TEST_CASE("parallel halfplanes resolve to the deeper or wider region") {
  // same direction: intersection is the deeper halfplane
  auto same = region_intersection({RegionSpec{make_halfplane({0, 0}, {0, 1})},
                                   RegionSpec{make_halfplane({0, 1}, {0, 1})}});
  auto ms = resolve_metric(same);
  REQUIRE(ms.has_value());
  CHECK(ms->lambda({0.0, 3.0}) == doctest::Approx(0.5).epsilon(1e-14));

  // opposite directions overlapping: a strip, no closed form in this catalog
  auto strip = region_intersection({RegionSpec{make_halfplane({0, 0}, {0, 1})},
                                    RegionSpec{make_halfplane({0, 1}, {0, -1})}});
  CHECK_FALSE(resolve_metric(strip).has_value());
}
