#include "vorocell/raster.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <thread>

namespace vorocell {

namespace {

unsigned thread_count() {
  unsigned n = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("VOROCELL_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v > 0) n = static_cast<unsigned>(v);
  }
  return std::max(n, 1u);
}

}  // namespace

Vector LabelGrid::center(int row, int col) const {
  const double dx = (domain_max(0) - domain_min(0)) / width;
  const double dy = (domain_max(1) - domain_min(1)) / height;
  Vector c(2);
  c(0) = domain_min(0) + (col + 0.5) * dx;
  c(1) = domain_max(1) - (row + 0.5) * dy;
  return c;
}

LabelGrid rasterize(const Scene& scene, int width, int height,
                    const TauPolicy& policy) {
  validate(scene);
  if (scene.dimension != 2)
    throw DimensionMismatch("rasterize: scene must be 2-D");
  if (width < 2 || height < 2)
    throw DomainError("rasterize: grid must be at least 2 x 2");

  LabelGrid grid;
  grid.width = width;
  grid.height = height;
  grid.domain_min = scene.domain_min;
  grid.domain_max = scene.domain_max;
  const double dx = (scene.domain_max(0) - scene.domain_min(0)) / width;
  const double dy = (scene.domain_max(1) - scene.domain_min(1)) / height;
  grid.tau = policy.resolve(std::sqrt(dx * dx + dy * dy));
  grid.pixels.resize(static_cast<size_t>(width) * static_cast<size_t>(height));

  std::atomic<int> next_row{0};
  const auto worker = [&]() {
    for (;;) {
      const int row = next_row.fetch_add(1);
      if (row >= height) return;
      for (int col = 0; col < width; ++col) {
        const VoronoiAssignment va =
            voronoi_assign(grid.center(row, col), scene, grid.tau);
        PixelLabel& px = grid.pixels[static_cast<size_t>(row) *
                                         static_cast<size_t>(width) +
                                     static_cast<size_t>(col)];
        px.nearest = va.nearest;
        px.boundary = va.on_boundary;
      }
    }
  };

  const unsigned workers =
      std::min<unsigned>(thread_count(), static_cast<unsigned>(height));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return grid;
}

double boundary_fraction(const LabelGrid& grid) {
  if (grid.pixels.empty()) return 0.0;
  size_t count = 0;
  for (const auto& px : grid.pixels) count += px.boundary ? 1 : 0;
  return static_cast<double>(count) / static_cast<double>(grid.pixels.size());
}

Palette default_palette(std::size_t n_sites) {
  static const Rgb base[] = {
      {31, 119, 180}, {255, 127, 14}, {44, 160, 44},   {214, 39, 40},
      {148, 103, 189}, {140, 86, 75}, {227, 119, 194}, {127, 127, 127},
      {188, 189, 34}, {23, 190, 207}, {174, 199, 232}, {255, 187, 120},
  };
  Palette p;
  for (std::size_t i = 0; i < n_sites; ++i)
    p.push_back(base[i % (sizeof(base) / sizeof(base[0]))]);
  p.push_back({0, 0, 0});  // boundary color
  return p;
}

void export_image(const LabelGrid& grid, const std::string& path,
                  const Palette& palette) {
  std::size_t n_labels = 0;
  for (const auto& px : grid.pixels)
    for (int k : px.nearest)
      n_labels = std::max(n_labels, static_cast<size_t>(k) + 1);
  const Palette pal =
      palette.empty() ? default_palette(n_labels) : palette;
  if (pal.size() < n_labels + 1)
    throw DomainError("export_image: palette too small");

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("export_image: cannot open " + path);
  out << "P6\n" << grid.width << " " << grid.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<size_t>(grid.width) * 3);
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      const PixelLabel& px = grid.at(r, c);
      const Rgb color =
          px.boundary ? pal.back()
                      : pal[static_cast<size_t>(px.nearest.front())];
      row[static_cast<size_t>(c) * 3 + 0] = color.r;
      row[static_cast<size_t>(c) * 3 + 1] = color.g;
      row[static_cast<size_t>(c) * 3 + 2] = color.b;
    }
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size()));
  }
  if (!out.good()) throw IoError("export_image: write failed for " + path);
}

void export_graymap(const LabelGrid& grid, const std::string& path) {
  std::size_t n_labels = 1;
  for (const auto& px : grid.pixels)
    for (int k : px.nearest)
      n_labels = std::max(n_labels, static_cast<size_t>(k) + 1);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("export_graymap: cannot open " + path);
  out << "P2\n" << grid.width << " " << grid.height << "\n255\n";
  for (int r = 0; r < grid.height; ++r) {
    for (int c = 0; c < grid.width; ++c) {
      const PixelLabel& px = grid.at(r, c);
      const int gray =
          px.boundary
              ? 0
              : static_cast<int>(255.0 *
                                 (static_cast<double>(px.nearest.front()) + 1.0) /
                                 static_cast<double>(n_labels));
      out << gray << (c + 1 == grid.width ? '\n' : ' ');
    }
  }
  if (!out.good()) throw IoError("export_graymap: write failed for " + path);
}

void export_bisector_svg(const std::vector<BoundaryPoint>& points,
                         const Vector& box_min, const Vector& box_max,
                         const std::string& path) {
  constexpr double view = 800.0;
  const double wx = box_max(0) - box_min(0);
  const double wy = box_max(1) - box_min(1);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("export_bisector_svg: cannot open " + path);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      << "width=\"800\" height=\"800\" viewBox=\"0 0 800 800\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"800\" "
      << "fill=\"#ffffff\"/>\n";
  char buf[160];
  for (const auto& bp : points) {
    const double sx = (bp.point(0) - box_min(0)) / wx * view;
    const double sy = (box_max(1) - bp.point(1)) / wy * view;
    std::snprintf(buf, sizeof(buf),
                  "<circle cx=\"%.4f\" cy=\"%.4f\" r=\"2\" fill=\"#d62728\"/>\n",
                  sx, sy);
    out << buf;
  }
  out << "</svg>\n";
  if (!out.good())
    throw IoError("export_bisector_svg: write failed for " + path);
}

}  // namespace vorocell
