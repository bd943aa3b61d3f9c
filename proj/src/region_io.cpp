#include "poincare/region_io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "poincare/errors.hpp"

namespace poincare {

namespace {

using nlohmann::ordered_json;

void check_keys(const ordered_json& j, std::initializer_list<const char*> allowed,
                const std::string& where) {
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!ok.count(it.key()))
      fail(ErrorKind::structural, "unknown key \"" + it.key() + "\" in " + where);
  }
  for (const auto& k : ok) {
    if (k != "type" && !j.contains(k))
      fail(ErrorKind::structural, "missing key \"" + k + "\" in " + where);
  }
}

double parse_num(const ordered_json& j, const std::string& where) {
  if (!j.is_number()) fail(ErrorKind::structural, where + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) fail(ErrorKind::structural, where + " must be finite");
  return v;
}

Point parse_point(const ordered_json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    fail(ErrorKind::structural, where + " must be [x, y]");
  return Point{parse_num(j[0], where + "[0]"), parse_num(j[1], where + "[1]")};
}

RegionSpec parse_node(const ordered_json& j) {
  if (!j.is_object()) fail(ErrorKind::structural, "region node must be an object");
  if (!j.contains("type") || !j["type"].is_string())
    fail(ErrorKind::structural, "region node needs a string \"type\"");
  const std::string type = j["type"].get<std::string>();

  if (type == "disk" || type == "diskcomplement") {
    check_keys(j, {"type", "center", "radius"}, type);
    Point c = parse_point(j["center"], type + ".center");
    double r = parse_num(j["radius"], type + ".radius");
    if (r <= 0.0) fail(ErrorKind::domain, type + ".radius must be positive");
    if (type == "disk") return RegionSpec{Disk{c, r}};
    return RegionSpec{DiskComplement{c, r}};
  }
  if (type == "halfplane") {
    check_keys(j, {"type", "anchor", "normal"}, type);
    Point a = parse_point(j["anchor"], "halfplane.anchor");
    Point n = parse_point(j["normal"], "halfplane.normal");
    if (norm(n) == 0.0) fail(ErrorKind::domain, "halfplane.normal must be nonzero");
    return RegionSpec{make_halfplane(a, n)};
  }
  if (type == "punctures") {
    check_keys(j, {"type", "points"}, type);
    const auto& pts = j["points"];
    if (!pts.is_array()) fail(ErrorKind::structural, "punctures.points must be an array");
    PuncturedPlane pp;
    for (size_t i = 0; i < pts.size(); ++i)
      pp.punctures.push_back(parse_point(pts[i], "punctures.points[" + std::to_string(i) + "]"));
    return RegionSpec{pp};
  }
  if (type == "segment") {
    check_keys(j, {"type", "a", "b"}, type);
    Point a = parse_point(j["a"], "segment.a");
    Point b = parse_point(j["b"], "segment.b");
    if (a == b) fail(ErrorKind::domain, "segment endpoints must differ");
    return RegionSpec{Segment{a, b}};
  }
  if (type == "union" || type == "intersection") {
    check_keys(j, {"type", "args"}, type);
    const auto& args = j["args"];
    if (!args.is_array() || args.empty())
      fail(ErrorKind::structural, type + ".args must be a nonempty array");
    std::vector<RegionSpec> parts;
    for (const auto& a : args) parts.push_back(parse_node(a));
    if (parts.size() == 1) return parts[0];
    if (type == "union") return region_union(std::move(parts));
    return region_intersection(std::move(parts));
  }
  if (type == "complement") {
    check_keys(j, {"type", "arg"}, type);
    return region_complement(parse_node(j["arg"]));
  }
  fail(ErrorKind::structural, "unknown region type \"" + type + "\"");
}

ordered_json point_json(const Point& p) { return ordered_json::array({p.x, p.y}); }

ordered_json node_json(const RegionSpec& r) {
  return std::visit(
      [](const auto& n) -> ordered_json {
        using T = std::decay_t<decltype(n)>;
        ordered_json j;
        if constexpr (std::is_same_v<T, Disk>) {
          j["type"] = "disk";
          j["center"] = point_json(n.center);
          j["radius"] = n.radius;
        } else if constexpr (std::is_same_v<T, DiskComplement>) {
          j["type"] = "diskcomplement";
          j["center"] = point_json(n.center);
          j["radius"] = n.radius;
        } else if constexpr (std::is_same_v<T, HalfPlane>) {
          j["type"] = "halfplane";
          j["anchor"] = point_json(n.anchor);
          j["normal"] = point_json(n.inward_normal);
        } else if constexpr (std::is_same_v<T, PuncturedPlane>) {
          j["type"] = "punctures";
          auto arr = ordered_json::array();
          for (const auto& q : n.punctures) arr.push_back(point_json(q));
          j["points"] = arr;
        } else if constexpr (std::is_same_v<T, FullPlane>) {
          j["type"] = "punctures";
          j["points"] = ordered_json::array();
        } else if constexpr (std::is_same_v<T, Segment>) {
          j["type"] = "segment";
          j["a"] = point_json(n.a);
          j["b"] = point_json(n.b);
        } else if constexpr (std::is_same_v<T, UnionNode>) {
          j["type"] = "union";
          auto arr = ordered_json::array();
          for (const auto& a : n.args) arr.push_back(node_json(a));
          j["args"] = arr;
        } else if constexpr (std::is_same_v<T, IntersectionNode>) {
          j["type"] = "intersection";
          auto arr = ordered_json::array();
          for (const auto& a : n.args) arr.push_back(node_json(a));
          j["args"] = arr;
        } else {
          j["type"] = "complement";
          j["arg"] = node_json(n.arg.front());
        }
        return j;
      },
      r.node);
}

}  // namespace

RegionSpec parse_region(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::structural, std::string("region JSON parse error: ") + e.what());
  }
  return parse_node(j);
}

RegionSpec load_region(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::structural, "cannot open region file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_region(ss.str());
}

std::string region_to_json(const RegionSpec& r) { return node_json(r).dump(2); }

}  // namespace poincare
