#include <doctest.h>

#include <string>

#include "poincare/errors.hpp"
#include "poincare/region.hpp"
#include "poincare/region_io.hpp"

using namespace poincare;

TEST_CASE("parse a disk") {
  auto r = parse_region(R"({"type":"disk","center":[0.3,0.4],"radius":0.25})");
  const Disk* d = std::get_if<Disk>(&r.node);
  REQUIRE(d != nullptr);
  CHECK(d->center == Point{0.3, 0.4});
  CHECK(d->radius == 0.25);
}

TEST_CASE("parse a nested combination") {
  auto r = parse_region(R"({
    "type": "union",
    "args": [
      {"type": "halfplane", "anchor": [0,0], "normal": [0,2]},
      {"type": "complement", "arg": {"type": "disk", "center": [0,-2], "radius": 1}}
    ]
  })");
  CHECK(contains(r, {0.0, 1.0}));
  CHECK(contains(r, {5.0, -2.0}));
  CHECK_FALSE(contains(r, {0.0, -2.0}));
  const HalfPlane* h = nullptr;
  if (const auto* u = std::get_if<UnionNode>(&r.node))
    h = std::get_if<HalfPlane>(&u->args[0].node);
  REQUIRE(h != nullptr);
  CHECK(h->inward_normal == Point{0.0, 1.0});  // parser normalizes
}

TEST_CASE("round trip through serialization") {
  auto r = parse_region(R"({
    "type": "intersection",
    "args": [
      {"type": "disk", "center": [-0.5, 0], "radius": 1},
      {"type": "disk", "center": [0.5, 0], "radius": 1},
      {"type": "punctures", "points": [[0, 0.25]]}
    ]
  })");
  auto r2 = parse_region(region_to_json(r));
  for (double x = -1.0; x <= 1.0; x += 0.21)
    for (double y = -1.0; y <= 1.0; y += 0.19)
      CHECK(contains(r, {x, y}) == contains(r2, {x, y}));
  CHECK(region_punctures(r2).size() == 1);
}

TEST_CASE("unknown keys are rejected") {
  CHECK_THROWS_AS(parse_region(R"({"type":"disk","center":[0,0],"radius":1,"extra":1})"),
                  Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"halfplane","anchor":[0,0]})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"blob"})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"center":[0,0],"radius":1})"), Error);
}

TEST_CASE("bad values are rejected") {
  CHECK_THROWS_AS(parse_region(R"({"type":"disk","center":[0,0],"radius":0})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"disk","center":[0,0],"radius":-2})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"disk","center":[0],"radius":1})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"disk","center":["a",0],"radius":1})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"halfplane","anchor":[0,0],"normal":[0,0]})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"segment","a":[0,0],"b":[0,0]})"), Error);
  CHECK_THROWS_AS(parse_region(R"({"type":"union","args":[]})"), Error);
  CHECK_THROWS_AS(parse_region("not json at all"), Error);
}

TEST_CASE("singleton boolean nodes unwrap") {
  auto r = parse_region(R"({"type":"union","args":[{"type":"disk","center":[0,0],"radius":1}]})");
  CHECK(std::get_if<Disk>(&r.node) != nullptr);
}

TEST_CASE("fixture files load") {
  auto lens = load_region(std::string(TEST_DATA_DIR) + "/lens.json");
  CHECK(contains(lens, {0.0, 0.0}));
  CHECK_FALSE(contains(lens, {0.9, 0.0}));
  CHECK_THROWS_AS(load_region(std::string(TEST_DATA_DIR) + "/bad_key.json"), Error);
  CHECK_THROWS_AS(load_region(std::string(TEST_DATA_DIR) + "/no_such_file.json"), Error);
}
