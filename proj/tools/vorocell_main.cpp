#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vorocell/bisector.hpp"
#include "vorocell/raster.hpp"
#include "vorocell/scene_io.hpp"
#include "vorocell/verify.hpp"

namespace {

using namespace vorocell;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitIo = 4;
constexpr int kExitVerify = 5;

Vector parse_point(const std::string& text) {
  std::vector<double> coords;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      coords.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw DomainError("--point expects comma-separated numbers");
    }
  }
  if (coords.empty()) throw DomainError("--point expects coordinates");
  Vector out(static_cast<Eigen::Index>(coords.size()));
  for (Eigen::Index i = 0; i < out.size(); ++i)
    out(i) = coords[static_cast<size_t>(i)];
  return out;
}

int run_render(const std::string& scene_path, int width, int height,
               const std::string& out_path, double tau, bool fixed_tau) {
  const Scene scene = load_scene(scene_path);
  const TauPolicy policy =
      fixed_tau ? TauPolicy::fixed_tau(tau) : TauPolicy::pitch_scaled(tau);
  const LabelGrid grid = rasterize(scene, width, height, policy);
  export_image(grid, out_path);
  std::printf("boundary_fraction=%.10g\n", boundary_fraction(grid));
  return kExitOk;
}

int run_classify(const std::string& scene_path, int site, const std::string& point,
                 double tau) {
  const Scene scene = load_scene(scene_path);
  if (site < 0 || site >= static_cast<int>(scene.sites.size()))
    throw DomainError("--site index out of range");
  const Vector x = parse_point(point);
  if (x.size() != scene.dimension)
    throw DimensionMismatch("query point does not match scene dimension");
  if (scene.sites.size() < 2)
    throw DomainError("classification needs at least two sites");
  const Site rest = union_of(scene.sites, site);
  const Classification c =
      classify(x, scene.sites[static_cast<size_t>(site)], rest, scene.norm, tau);
  std::printf("%s f=%.12g\n", to_string(c.verdict), c.f_value);
  return kExitOk;
}

int run_bisector(const std::string& scene_path, int site, int rays,
                 const std::string& out_path) {
  const Scene scene = load_scene(scene_path);
  if (scene.dimension != 2)
    throw DimensionMismatch("bisector harvesting requires a 2-D scene");
  if (site < 0 || site >= static_cast<int>(scene.sites.size()))
    throw DomainError("--site index out of range");

  std::vector<BoundaryPoint> points;
  if (scene.sites.size() >= 2) {
    std::vector<Vector> anchors;
    for (const auto& prim : scene.sites[static_cast<size_t>(site)].primitives)
      if (const auto* ps = std::get_if<PointSet>(&prim))
        for (Eigen::Index i = 0; i < ps->points.cols(); ++i)
          anchors.push_back(ps->points.col(i));
    if (anchors.empty())
      throw DomainError("site has no point primitive to anchor rays");
    const Site rest = union_of(scene.sites, site);
    const double two_pi = 6.283185307179586;
    for (int i = 0; i < rays; ++i) {
      Vector dir(2);
      dir << std::cos(two_pi * i / rays), std::sin(two_pi * i / rays);
      try {
        if (auto bp = ray_shoot(anchors[static_cast<size_t>(i) % anchors.size()],
                                dir, scene.domain_min, scene.domain_max,
                                scene.sites[static_cast<size_t>(site)], rest,
                                scene.norm, 1e-9))
          points.push_back(std::move(*bp));
      } catch (const BadOriginError&) {
      }
    }
  }
  export_bisector_svg(points, scene.domain_min, scene.domain_max, out_path);
  std::printf("%zu\n", points.size());
  return kExitOk;
}

struct VerdictTally {
  bool all_pass = true;
  bool unexpected = false;
};

void run_clarkson_suite(long trials, std::uint64_t seed, VerdictTally& tally) {
  const std::vector<int> dims{2, 3, 4, 5, 6, 7, 8};
  for (const double p : {1.5, 2.0, 2.718281828, 4.0}) {
    const auto rep = verify_clarkson(NormSpec::lp(p), dims, trials, seed);
    std::printf("%s\n", rep.to_json().dump().c_str());
    if (!rep.pass()) tally.all_pass = false;
  }
}

void run_theorem_suite(const std::string& scene_path, int site, long trials,
                       std::uint64_t seed, bool bypass, VerdictTally& tally) {
  const Scene scene = load_scene(scene_path);
  TheoremRun run;
  try {
    run = verify_theorem(scene, site, trials, seed, bypass);
  } catch (const PreconditionFailed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    tally.unexpected = true;
    return;
  }

  nlohmann::json gates;
  gates["check"] = "theorem.gates";
  gates["scene_digest"] = scene_digest(scene);
  gates["uniformly_convex"] = run.gates.uniformly_convex;
  gates["separation"] = run.gates.separation;
  gates["positively_separated"] = run.gates.positively_separated;
  gates["bypassed"] = run.bypassed;
  std::printf("%s\n", gates.dump().c_str());
  for (const auto& rep : run.reports)
    std::printf("%s\n", rep.to_json().dump().c_str());

  if (!run.bypassed) {
    if (!run.all_pass()) tally.all_pass = false;
    return;
  }
  // A bypassed counterexample must break the boundary and closure sub-suites
  // while the Lipschitz-forced interior one stays green.
  const bool expected = !run.reports[0].pass() && run.reports[1].pass() &&
                        !run.reports[2].pass();
  if (expected)
    std::printf("expected-fail reproduced\n");
  else
    tally.unexpected = true;
}

int run_verify(const std::string& suite, const std::string& scene_path,
               int site, long trials, std::uint64_t seed, bool bypass) {
  VerdictTally tally;
  const bool all = suite == "all";
  if (suite == "clarkson" || all)
    run_clarkson_suite(trials > 0 ? trials : 100000, seed, tally);
  if (suite == "not-attained" || all) {
    const auto rep =
        verify_not_attained(50, trials > 0 ? trials : 10000, seed);
    std::printf("%s\n", rep.to_json().dump().c_str());
    if (!rep.pass()) tally.all_pass = false;
  }
  if (suite == "remark-1d" || all) {
    const auto rep = verify_remark_1d(2000);
    std::printf("%s\n", rep.to_json().dump().c_str());
    if (!rep.pass()) tally.all_pass = false;
  }
  if (suite == "theorem" || (all && !scene_path.empty())) {
    if (scene_path.empty())
      throw DomainError("--suite theorem requires --scene");
    run_theorem_suite(scene_path, site, trials > 0 ? trials : 300, seed,
                      bypass, tally);
  }
  if (tally.unexpected || !tally.all_pass) return kExitVerify;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Voronoi cells, bisectors, and dominance regions under lp norms"};
  app.require_subcommand(1);

  std::string scene_path, out_path, point_text, suite = "all";
  int width = 512, height = 512, site = 0, rays = 64;
  double tau = 0.25;
  bool fixed_tau = false, bypass = false;
  long trials = 0;
  std::uint64_t seed = 7;

  auto* render = app.add_subcommand("render", "rasterize a scene to a P6 image");
  render->add_option("scene", scene_path)->required();
  render->add_option("--width", width);
  render->add_option("--height", height);
  render->add_option("--out", out_path)->required();
  render->add_option("--tau", tau,
                     "pitch factor, or the absolute band with --fixed-tau");
  render->add_flag("--fixed-tau", fixed_tau);

  auto* cls = app.add_subcommand("classify", "classify a point against a cell");
  cls->add_option("scene", scene_path)->required();
  cls->add_option("--site", site)->required();
  cls->add_option("--point", point_text, "comma-separated coordinates")
      ->required();
  double cls_tau = 1e-9;
  cls->add_option("--tau", cls_tau);

  auto* bis = app.add_subcommand("bisector", "harvest boundary points to SVG");
  bis->add_option("scene", scene_path)->required();
  bis->add_option("--site", site);
  bis->add_option("--rays", rays);
  bis->add_option("--out", out_path)->required();

  auto* ver = app.add_subcommand("verify", "run verification suites");
  ver->add_option("--suite", suite)
      ->check(CLI::IsMember({"clarkson", "theorem", "not-attained",
                             "remark-1d", "all"}));
  ver->add_option("--scene", scene_path);
  ver->add_option("--site", site);
  ver->add_option("--seed", seed);
  ver->add_option("--trials", trials);
  ver->add_flag("--allow-gate-bypass", bypass);

  CLI11_PARSE(app, argc, argv);

  try {
    if (render->parsed())
      return run_render(scene_path, width, height, out_path, tau, fixed_tau);
    if (cls->parsed()) return run_classify(scene_path, site, point_text, cls_tau);
    if (bis->parsed()) return run_bisector(scene_path, site, rays, out_path);
    if (ver->parsed())
      return run_verify(suite, scene_path, site, trials, seed, bypass);
  } catch (const SceneParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  } catch (const DimensionMismatch& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDimension;
  } catch (const IoError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitParse;
  }
  return kExitOk;
}
