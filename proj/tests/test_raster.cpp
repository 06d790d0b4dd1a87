#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "vorocell/raster.hpp"
#include "vorocell/scene_io.hpp"

using namespace vorocell;

namespace {

Vector vec2(double x, double y) {
  Vector v(2);
  v << x, y;
  return v;
}

Scene two_point_scene(double p = 2.0) {
  Scene s;
  s.dimension = 2;
  s.domain_min = vec2(-5, -5);
  s.domain_max = vec2(5, 5);
  s.norm = NormSpec::lp(p);
  s.sites.push_back(site_of(make_points2d({{0, 0}})));
  s.sites.push_back(site_of(make_points2d({{2, 0}})));
  return s;
}

Scene fig3_scene() {
  Scene s;
  s.dimension = 2;
  s.domain_min = vec2(-5, -5);
  s.domain_max = vec2(5, 5);
  s.norm = NormSpec::linf();
  s.sites.push_back(site_of(make_points2d({{0, 0}})));
  s.sites.push_back(site_of(make_points2d({{-2, 0}, {2, 0}, {0, -2}})));
  return s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string tmp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / name).string();
}

}  // namespace

TEST_CASE("boundary pixels trace the vertical bisector of two points") {
  const Scene s = two_point_scene();
  const LabelGrid grid = rasterize(s, 256, 256);
  const double pitch = 10.0 / 256.0;
  int boundary = 0;
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      if (!grid.at(r, c).boundary) continue;
      ++boundary;
      CHECK(std::abs(grid.center(r, c)(0) - 1.0) <= 2.0 * pitch);
    }
  }
  CHECK(boundary > 0);
  CHECK(boundary_fraction(grid) < 0.05);
}

TEST_CASE("single-site scenes have no boundary pixels") {
  Scene s;
  s.dimension = 2;
  s.domain_min = vec2(-1, -1);
  s.domain_max = vec2(1, 1);
  s.norm = NormSpec::lp(2);
  s.sites.push_back(site_of(make_points2d({{0, 0}})));
  CHECK(boundary_fraction(rasterize(s, 64, 64)) == 0.0);
}

TEST_CASE("grid labels equal fresh assignments at pixel centers") {
  const Scene s = two_point_scene(2.718281828);
  const LabelGrid grid = rasterize(s, 64, 64);
  std::mt19937_64 rng(31);
  for (int t = 0; t < 1000; ++t) {
    const int r = static_cast<int>(rng() % 64);
    const int c = static_cast<int>(rng() % 64);
    const VoronoiAssignment va =
        voronoi_assign(grid.center(r, c), s, grid.tau);
    CHECK(grid.at(r, c).nearest == va.nearest);
    CHECK(grid.at(r, c).boundary == va.on_boundary);
  }
}

TEST_CASE("pitch-tied boundary fraction shrinks under refinement") {
  for (double p : {1.5, 2.0, 2.718281828, 4.0}) {
    const Scene s = two_point_scene(p);
    const double coarse = boundary_fraction(rasterize(s, 256, 256));
    const double fine = boundary_fraction(rasterize(s, 512, 512));
    CHECK(fine < coarse);
    if (p == 2.0) CHECK(fine <= 0.6 * coarse);
  }
}

TEST_CASE("fixed-tau equality fraction of the fat scene survives refinement") {
  const Scene s = fig3_scene();
  const TauPolicy fixed = TauPolicy::fixed_tau(1e-6);
  const double coarse = boundary_fraction(rasterize(s, 128, 128, fixed));
  const double fine = boundary_fraction(rasterize(s, 256, 256, fixed));
  CHECK(coarse > 0.2);  // the equality set covers real area
  CHECK(std::abs(fine - coarse) / coarse < 0.2);
}

TEST_CASE("the max-norm cell's strict region is the bounded house pentagon") {
  // f < 0 exactly on {|x| <= 1, -1 <= y <= 2 - |x|}: walls toward the two
  // side points, a floor toward the bottom one, and a roof peaking at (0,2).
  const Scene s = fig3_scene();
  const LabelGrid grid = rasterize(s, 128, 128, TauPolicy::fixed_tau(1e-6));
  const double pitch = 10.0 / 128.0;
  const auto in_house = [](double x, double y, double slack) {
    return std::abs(x) <= 1.0 + slack && y >= -1.0 - slack &&
           y <= 2.0 - std::abs(x) + slack;
  };
  int strict_p = 0;
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      const PixelLabel& px = grid.at(r, c);
      if (px.boundary || px.nearest != std::vector<int>{0}) continue;
      ++strict_p;
      const Vector ctr = grid.center(r, c);
      CHECK(in_house(ctr(0), ctr(1), pitch));
    }
  }
  CHECK(strict_p > 0);
  // interior sample points of the pentagon carry the strict label
  for (const auto& q : {std::pair{0.0, 0.0}, {0.5, 0.4}, {0.0, 1.5}}) {
    const VoronoiAssignment va =
        voronoi_assign(vec2(q.first, q.second), s, 1e-6);
    CHECK(va.nearest == std::vector<int>{0});
  }
}

TEST_CASE("the six-point fixture renders six cells with thin boundaries") {
  const Scene fig1 = load_scene(std::string(VOROCELL_SCENE_DIR) + "/fig1.scene");
  const LabelGrid grid = rasterize(fig1, 192, 192);
  std::vector<int> seen(6, 0);
  for (const auto& px : grid.pixels)
    if (!px.boundary) ++seen[static_cast<size_t>(px.nearest.front())];
  for (int k = 0; k < 6; ++k) CHECK(seen[static_cast<size_t>(k)] > 0);
  CHECK(boundary_fraction(grid) < 0.05);

  // the four two-point sites each claim pixels too (cells may look split)
  const Scene fig2 = load_scene(std::string(VOROCELL_SCENE_DIR) + "/fig2.scene");
  const LabelGrid g2 = rasterize(fig2, 96, 96);
  std::vector<int> seen2(4, 0);
  for (const auto& px : g2.pixels)
    if (!px.boundary) ++seen2[static_cast<size_t>(px.nearest.front())];
  for (int k = 0; k < 4; ++k) CHECK(seen2[static_cast<size_t>(k)] > 0);
}

TEST_CASE("the truncated lattice fixture renders") {
  const Scene lattice =
      load_scene(std::string(VOROCELL_SCENE_DIR) + "/horvath_lattice.scene");
  const LabelGrid grid =
      rasterize(lattice, 64, 64, TauPolicy::fixed_tau(1e-6));
  CHECK(boundary_fraction(grid) > 0.0);  // fat equality parts survive
}

TEST_CASE("rasterize rejects non-planar scenes and tiny grids") {
  Scene s;
  s.dimension = 3;
  s.domain_min = Vector::Constant(3, -1.0);
  s.domain_max = Vector::Constant(3, 1.0);
  s.norm = NormSpec::lp(2);
  Eigen::MatrixXd one(3, 1);
  one << 0, 0, 0;
  s.sites.push_back(site_of(PointSet{one}));
  CHECK_THROWS_AS(rasterize(s, 32, 32), DimensionMismatch);
  CHECK_THROWS_AS(rasterize(two_point_scene(), 1, 32), DomainError);
}

TEST_CASE("P6 export format and determinism") {
  const Scene s = two_point_scene();
  const LabelGrid grid = rasterize(s, 32, 32);
  const std::string path1 = tmp_path("vc_raster_a.ppm");
  const std::string path2 = tmp_path("vc_raster_b.ppm");
  export_image(grid, path1);
  export_image(rasterize(s, 32, 32), path2);
  const std::string bytes1 = slurp(path1);
  CHECK(bytes1.substr(0, 3) == "P6\n");
  CHECK(bytes1 == slurp(path2));
  std::remove(path1.c_str());
  std::remove(path2.c_str());

  LabelGrid tiny;
  tiny.width = 2;
  tiny.height = 2;
  tiny.domain_min = vec2(0, 0);
  tiny.domain_max = vec2(1, 1);
  tiny.tau = 1e-9;
  tiny.pixels = {{{0}, false}, {{1}, false}, {{1}, false}, {{0}, true}};
  const std::string tiny_path = tmp_path("vc_raster_tiny.ppm");
  export_image(tiny, tiny_path);
  const std::string bytes = slurp(tiny_path);
  const std::string header = "P6\n2 2\n255\n";
  CHECK(bytes.size() == header.size() + 12);  // 3 bytes per pixel
  std::remove(tiny_path.c_str());

  CHECK_THROWS_AS(export_image(grid, "/nonexistent-dir/x.ppm"), IoError);
}

TEST_CASE("P2 graymap export") {
  const Scene s = two_point_scene();
  const std::string path = tmp_path("vc_raster.pgm");
  export_graymap(rasterize(s, 16, 16), path);
  const std::string bytes = slurp(path);
  CHECK(bytes.substr(0, 3) == "P2\n");
  std::remove(path.c_str());
}

TEST_CASE("bisector SVG export") {
  const std::string path = tmp_path("vc_bisector.svg");
  export_bisector_svg({}, vec2(-5, -5), vec2(5, 5), path);
  const std::string empty = slurp(path);
  CHECK(empty.find("<?xml") == 0);
  CHECK(empty.find("<svg") != std::string::npos);
  CHECK(empty.find("<circle") == std::string::npos);

  std::vector<BoundaryPoint> pts;
  for (double t : {0.0, 0.5, 1.0})
    pts.push_back({vec2(t, t), 0.0, 0.0});
  export_bisector_svg(pts, vec2(-5, -5), vec2(5, 5), path);
  const std::string three = slurp(path);
  size_t count = 0, pos = 0;
  while ((pos = three.find("<circle", pos)) != std::string::npos) {
    ++count;
    pos += 7;
  }
  CHECK(count == 3);

  const std::string path2 = tmp_path("vc_bisector2.svg");
  export_bisector_svg(pts, vec2(-5, -5), vec2(5, 5), path2);
  CHECK(three == slurp(path2));
  std::remove(path.c_str());
  std::remove(path2.c_str());
}
