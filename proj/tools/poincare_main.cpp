#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "poincare/capacity.hpp"
#include "poincare/catalog.hpp"
#include "poincare/errors.hpp"
#include "poincare/region_io.hpp"
#include "poincare/report_json.hpp"
#include "poincare/resolve.hpp"
#include "poincare/solver.hpp"
#include "poincare/verify.hpp"
#include "poincare/version.hpp"

namespace {

using namespace poincare;

constexpr double kPi = 3.14159265358979323846;

std::vector<double> parse_list(const std::string& s, const char* what) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorKind::structural, std::string(what) + ": bad number \"" + tok + "\"");
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

Point parse_pair(const std::string& s, const char* what) {
  auto v = parse_list(s, what);
  if (v.size() != 2) fail(ErrorKind::structural, std::string(what) + ": expected x,y");
  return Point{v[0], v[1]};
}

Point unit(Point p, const char* what) {
  double n = std::hypot(p.x, p.y);
  if (!(n > 0.0)) fail(ErrorKind::structural, std::string(what) + ": zero direction");
  return Point{p.x / n, p.y / n};
}

struct CatalogChoice {
  MetricEval metric;
  std::optional<RegionSpec> region;  // absent for the sphere and the full slit
};

RegionSpec wedge_region(Point v, double theta, Point bis) {
  double beta = std::atan2(bis.y, bis.x);
  double alpha = beta - theta / 2.0;
  Point n1{std::cos(alpha + kPi / 2.0), std::sin(alpha + kPi / 2.0)};
  Point n2{std::cos(alpha + theta - kPi / 2.0), std::sin(alpha + theta - kPi / 2.0)};
  RegionSpec h1{make_halfplane(v, n1)};
  RegionSpec h2{make_halfplane(v, n2)};
  if (theta < kPi) return region_intersection({h1, h2});
  if (theta == kPi) return h1;
  return region_union({h1, h2});
}

CatalogChoice catalog_lookup(const std::string& spec) {
  std::size_t colon = spec.find(':');
  std::string name = spec.substr(0, colon);
  std::vector<double> p;
  if (colon != std::string::npos) p = parse_list(spec.substr(colon + 1), "catalog parameters");

  auto want = [&](std::size_t lo, std::size_t hi) {
    if (p.size() < lo || p.size() > hi)
      fail(ErrorKind::structural, "catalog \"" + name + "\": wrong parameter count");
  };

  if (name == "sphere") {
    want(0, 0);
    return {metric_sphere(), std::nullopt};
  }
  if (name == "unitdisk") {
    want(0, 0);
    return {metric_disk(Point{0, 0}, 1.0), RegionSpec{Disk{Point{0, 0}, 1.0}}};
  }
  if (name == "disk") {
    want(3, 3);
    return {metric_disk(Point{p[0], p[1]}, p[2]), RegionSpec{Disk{Point{p[0], p[1]}, p[2]}}};
  }
  if (name == "halfplane") {
    want(4, 4);
    Point a{p[0], p[1]}, n = unit(Point{p[2], p[3]}, "halfplane normal");
    return {metric_halfplane(a, n), RegionSpec{make_halfplane(a, n)}};
  }
  if (name == "exteriordisk") {
    want(3, 3);
    return {metric_exterior_disk(Point{p[0], p[1]}, p[2]),
            RegionSpec{DiskComplement{Point{p[0], p[1]}, p[2]}}};
  }
  if (name == "punctureddisk") {
    want(3, 3);
    Point c{p[0], p[1]};
    RegionSpec r = region_intersection(
        {RegionSpec{Disk{c, p[2]}}, RegionSpec{PuncturedPlane{{c}}}});
    return {metric_punctured_disk(c, p[2]), r};
  }
  if (name == "annulus") {
    want(4, 4);
    Point c{p[0], p[1]};
    RegionSpec r = region_intersection(
        {RegionSpec{Disk{c, p[3]}}, RegionSpec{DiskComplement{c, p[2]}}});
    return {metric_annulus(c, p[2], p[3]), r};
  }
  if (name == "wedge") {
    want(3, 5);
    Point v{p[0], p[1]};
    double theta = p[2];
    if (!(theta > 0.0 && theta <= 2.0 * kPi))
      fail(ErrorKind::domain, "wedge opening must lie in (0, 2*pi]");
    Point bis = p.size() == 5 ? unit(Point{p[3], p[4]}, "wedge bisector") : Point{1.0, 0.0};
    std::optional<RegionSpec> r;
    if (theta < 2.0 * kPi) r = wedge_region(v, theta, bis);
    return {metric_wedge(v, theta, bis), r};
  }
  fail(ErrorKind::structural, "unknown catalog entry \"" + name + "\"");
}

void emit(const ojson& report, const std::string& out_path) {
  std::string text = to_json_string(report) + "\n";
  std::cout << text;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) fail(ErrorKind::structural, "cannot write " + out_path);
    f << text;
  }
}

ojson envelope(const std::string& command) {
  ojson rep;
  rep["tool"] = "poincare";
  rep["version"] = kVersion;
  rep["command"] = command;
  rep["timestamp"] = timestamp_iso8601();
  return rep;
}

ojson point_json(Point p) { return ojson::array({p.x, p.y}); }

Route route_of(const std::string& mode) {
  if (mode == "oracle") return Route::oracle;
  if (mode == "pde") return Route::pde;
  return Route::automatic;
}

int run_density(const std::string& catalog, const std::string& region_path,
                const std::string& point_str, const std::string& mode, double h,
                const std::string& dump_path, const std::string& out_path) {
  Point at = parse_pair(point_str, "--point");
  cplx z{at.x, at.y};

  std::optional<MetricEval> metric;
  std::optional<RegionSpec> region;
  std::string source;
  if (!catalog.empty()) {
    CatalogChoice c = catalog_lookup(catalog);
    metric = std::move(c.metric);
    region = std::move(c.region);
    source = "catalog:" + catalog;
  } else if (!region_path.empty()) {
    region = load_region(region_path);
    metric = resolve_metric(*region);
    source = "file:" + region_path;
  } else {
    fail(ErrorKind::structural, "density needs --catalog or --region");
  }

  bool use_pde = mode == "pde" || !dump_path.empty();
  if (mode == "oracle" && use_pde)
    fail(ErrorKind::structural, "--dump-field needs the pde route");
  if (!use_pde && !metric) {
    if (mode == "oracle")
      fail(ErrorKind::unsupported_oracle, "no closed form matches this region");
    use_pde = true;  // automatic fallback
  }

  ojson rep = envelope("density");
  rep["config"] = {{"source", source}, {"point", point_json(at)}, {"mode", mode}};
  ojson res;
  if (!use_pde) {
    if (!metric->in_domain(z)) fail(ErrorKind::domain, "point outside the region");
    res["method"] = "oracle:" + metric->tag;
    res["lambda"] = metric->lambda(z);
  } else {
    if (!region) fail(ErrorKind::unsupported_oracle, "this catalog entry has no plane region to solve on");
    RegionSolvePlan plan = plan_region_solve(*region, h);
    SolveOptions opt;
    opt.h = h;
    opt.window = plan.window;
    opt.far = plan.far;
    Field f = solve_liouville(*plan.view, opt);
    res["method"] = "pde";
    res["lambda"] = density_from_field(f, plan.chart, z);
    res["h"] = h;
    res["chart"] = plan.chart.describe();
    res["newton_iters"] = f.newton_iters;
    res["residual"] = f.final_residual;
    res["linear_solver"] = f.linear_solver;
    if (!dump_path.empty()) {
      dump_field_csv(f, plan.chart, dump_path);
      res["field_csv"] = dump_path;
    }
  }
  rep["result"] = std::move(res);
  emit(rep, out_path);
  return 0;
}

int run_pcap(const std::string& compact_path, const std::string& levels_str,
             double window_scale, bool no_translate, const std::string& out_path) {
  RegionSpec spec = load_region(compact_path);
  CapacityOptions opt;
  if (!levels_str.empty()) opt.levels = parse_list(levels_str, "--levels");
  opt.window_scale = window_scale;
  opt.allow_translate = !no_translate;
  CapacityReport r = compute_pcap(spec, opt);

  ojson rep = envelope("pcap");
  rep["config"] = {{"compact", compact_path},
                   {"levels", opt.levels},
                   {"window_scale", window_scale},
                   {"translate", opt.allow_translate}};
  ojson res;
  res["pcap"] = r.pcap;
  res["point_class"] = r.point_class;
  res["degenerate"] = r.degenerate;
  res["translated"] = r.translated;
  if (r.translated) res["shift"] = point_json(r.translated_by);
  if (!r.degenerate) {
    res["far_field"] = r.far_field;
    res["window"] = r.window;
    res["level_h"] = r.level_h;
    res["level_value"] = r.level_value;
    res["level_newton"] = r.level_newton;
    res["level_residual"] = r.level_residual;
    res["extrapolated"] = r.extrapolated;
    res["order"] = r.order;
  }
  rep["result"] = std::move(res);
  emit(rep, out_path);
  return 0;
}

int run_verify(const std::string& r1path, const std::string& r2path,
               const std::string& mode, const std::string& check, double tol,
               int samples, double h, const std::vector<std::string>& require_strs,
               std::uint64_t seed, const std::string& out_path) {
  RegionSpec o1 = load_region(r1path);
  RegionSpec o2 = load_region(r2path);

  ojson rep = envelope("verify");
  rep["config"] = {{"region1", r1path}, {"region2", r2path}, {"mode", mode},
                   {"check", check},    {"tol", tol},        {"samples", samples},
                   {"seed", seed}};
  bool pass = false;
  ojson res;

  if (check == "product") {
    std::vector<cplx> required;
    for (const auto& s : require_strs) {
      Point p = parse_pair(s, "--require");
      required.emplace_back(p.x, p.y);
    }
    ProductReport r = verify_product_inequality(o1, o2, route_of(mode), tol,
                                                required, h, samples, seed);
    res["routes"] = {{"region1", r.route1}, {"region2", r.route2},
                     {"intersection", r.route_inter}, {"union", r.route_union}};
    res["nested"] = r.nested;
    res["samples_evaluated"] = r.samples.size();
    res["min_ratio"] = r.min_ratio;
    res["argmin"] = ojson::array({r.argmin.real(), r.argmin.imag()});
    if (r.h > 0.0) {
      res["h"] = r.h;
      res["max_residual"] = r.max_residual;
    }
    if (!required.empty()) {
      ojson req = ojson::array();
      for (std::size_t k = 0; k < required.size(); ++k) {
        req.push_back({{"point", ojson::array({r.samples[k].z.real(), r.samples[k].z.imag()})},
                       {"ratio", r.samples[k].ratio}});
      }
      res["required"] = std::move(req);
    }
    if (!out_path.empty()) {
      ojson all = ojson::array();
      for (const RatioSample& s : r.samples)
        all.push_back({{"z", ojson::array({s.z.real(), s.z.imag()})},
                       {"lambda1", s.l1},
                       {"lambda2", s.l2},
                       {"lambda_inter", s.l_inter},
                       {"lambda_union", s.l_union},
                       {"ratio", s.ratio}});
      res["samples"] = std::move(all);
    }
    pass = r.pass;
  } else if (check == "capacity") {
    CapacitySubmultReport r = verify_capacity_submult(o1, o2, tol);
    auto cap_json = [](const CapacityReport& c) {
      return ojson{{"pcap", c.pcap}, {"point_class", c.point_class}, {"degenerate", c.degenerate}};
    };
    res["pcap_1"] = cap_json(r.k1);
    res["pcap_2"] = cap_json(r.k2);
    res["pcap_intersection"] = cap_json(r.inter);
    res["pcap_union"] = cap_json(r.uni);
    res["lhs"] = r.lhs;
    res["rhs"] = r.rhs;
    res["degenerate"] = r.degenerate;
    pass = r.pass;
  } else {
    fail(ErrorKind::structural, "unknown check \"" + check + "\"");
  }

  rep["result"] = std::move(res);
  rep["pass"] = pass;
  emit(rep, out_path);
  return pass ? 0 : 2;
}

int run_boundary_ratio(const std::string& r1path, const std::string& r2path,
                       const std::string& point_str, const std::string& inward_str,
                       int steps, const std::string& out_path) {
  RegionSpec o1 = load_region(r1path);
  RegionSpec o2 = load_region(r2path);
  Point p = parse_pair(point_str, "--point");
  Point d = parse_pair(inward_str, "--inward");
  BoundaryApproachReport r =
      verify_boundary_ratio(o1, o2, cplx{p.x, p.y}, cplx{d.x, d.y}, steps);

  ojson rep = envelope("boundary-ratio");
  rep["config"] = {{"region1", r1path}, {"region2", r2path},
                   {"point", point_json(p)}, {"inward", point_json(d)}, {"steps", steps}};
  rep["result"] = {{"offsets", r.offsets},
                   {"ratios", r.ratios},
                   {"final_gap", r.final_gap},
                   {"decay_order", r.decay_order}};
  rep["pass"] = r.pass;
  emit(rep, out_path);
  return r.pass ? 0 : 2;
}

int run_curvature(const std::string& r1path, const std::string& r2path,
                  const std::string& point_str, double fd_step, double match_tol,
                  int samples, std::uint64_t seed, const std::string& out_path) {
  RegionSpec o1 = load_region(r1path);
  RegionSpec o2 = load_region(r2path);
  Point p = parse_pair(point_str, "--point");
  CurvatureCheckReport r = verify_product_curvature(o1, o2, cplx{p.x, p.y},
                                                    fd_step, match_tol, samples, seed);

  ojson rep = envelope("curvature-check");
  rep["config"] = {{"region1", r1path}, {"region2", r2path}, {"point", point_json(p)},
                   {"fd_step", fd_step}, {"match_tol", match_tol},
                   {"samples", samples}, {"seed", seed}};
  rep["result"] = {{"k_alg", r.k_alg_at},
                   {"k_fd", r.k_fd_at},
                   {"k_min", r.k_min},
                   {"k_max", r.k_max}};
  rep["pass"] = r.pass;
  emit(rep, out_path);
  return r.pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("POINCARE_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) Eigen::setNbThreads(n);
  }

  CLI::App app{"hyperbolic metric densities of plane domains"};
  app.require_subcommand(1);

  std::string catalog, region_path, point_str, mode = "auto", dump_path, out_path;
  double h = 1.0 / 128.0;
  auto* den = app.add_subcommand("density", "evaluate the density of a region at a point");
  den->add_option("--catalog", catalog, "catalog entry, e.g. unitdisk or disk:0,0,2");
  den->add_option("--region", region_path, "region description file (json)");
  den->add_option("--point", point_str, "evaluation point x,y")->required();
  den->add_option("--mode", mode)->check(CLI::IsMember({"auto", "oracle", "pde"}));
  den->add_option("--h", h, "grid step for the pde route");
  den->add_option("--dump-field", dump_path, "write the solved field as csv (forces pde)");
  den->add_option("--out", out_path, "also write the report to this file");

  std::string compact_path, levels_str;
  double window_scale = 1.1;
  bool no_translate = false;
  std::string pcap_out;
  auto* pc = app.add_subcommand("pcap", "capacity of a compact set");
  pc->add_option("--compact", compact_path, "compact set description file (json)")->required();
  pc->add_option("--levels", levels_str, "grid steps, descending, comma separated");
  pc->add_option("--window-scale", window_scale);
  pc->add_flag("--no-translate", no_translate, "refuse to shift the set over the origin");
  pc->add_option("--out", pcap_out);

  std::string v1, v2, vmode = "auto", vcheck = "product", vout;
  double vtol = 1e-9, vh = 1.0 / 128.0;
  int vsamples = 200;
  std::uint64_t vseed = 1;
  std::vector<std::string> vrequire;
  auto* ver = app.add_subcommand("verify", "check the density product inequality on a region pair");
  ver->add_option("--region1", v1)->required();
  ver->add_option("--region2", v2)->required();
  ver->add_option("--mode", vmode)->check(CLI::IsMember({"auto", "oracle", "pde"}));
  ver->add_option("--check", vcheck)->check(CLI::IsMember({"product", "capacity"}));
  ver->add_option("--tol", vtol, "slack on the unit lower bound");
  ver->add_option("--samples", vsamples);
  ver->add_option("--h", vh, "grid step for the pde route");
  ver->add_option("--require", vrequire, "points that must be sampled, x,y each");
  ver->add_option("--seed", vseed);
  ver->add_option("--out", vout);

  std::string b1, b2, bpoint, binward, bout;
  int bsteps = 6;
  auto* br = app.add_subcommand("boundary-ratio",
                                "density ratio along a boundary approach path");
  br->add_option("--region1", b1)->required();
  br->add_option("--region2", b2)->required();
  br->add_option("--point", bpoint, "boundary point x,y")->required();
  br->add_option("--inward", binward, "approach direction x,y")->required();
  br->add_option("--steps", bsteps);
  br->add_option("--out", bout);

  std::string c1, c2, cpoint, cout_path;
  double cfd = 1e-3, cmatch = 1e-4;
  int csamples = 200;
  std::uint64_t cseed = 1;
  auto* cv = app.add_subcommand("curvature-check",
                                "curvature of the comparison density over a region pair");
  cv->add_option("--region1", c1)->required();
  cv->add_option("--region2", c2)->required();
  cv->add_option("--point", cpoint, "evaluation point x,y")->required();
  cv->add_option("--fd-step", cfd);
  cv->add_option("--match-tol", cmatch);
  cv->add_option("--samples", csamples);
  cv->add_option("--seed", cseed);
  cv->add_option("--out", cout_path);

  CLI11_PARSE(app, argc, argv);

  try {
    if (den->parsed())
      return run_density(catalog, region_path, point_str, mode, h, dump_path, out_path);
    if (pc->parsed())
      return run_pcap(compact_path, levels_str, window_scale, no_translate, pcap_out);
    if (ver->parsed())
      return run_verify(v1, v2, vmode, vcheck, vtol, vsamples, vh, vrequire, vseed, vout);
    if (br->parsed())
      return run_boundary_ratio(b1, b2, bpoint, binward, bsteps, bout);
    if (cv->parsed())
      return run_curvature(c1, c2, cpoint, cfd, cmatch, csamples, cseed, cout_path);
  } catch (const poincare::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
