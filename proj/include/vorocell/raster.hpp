#ifndef VOROCELL_RASTER_HPP
#define VOROCELL_RASTER_HPP

#include <string>
#include <vector>

#include "vorocell/bisector.hpp"
#include "vorocell/dominance.hpp"

namespace vorocell {

// Equality-band policy for rasterization: either a fixed tau (exposes fat
// bisectors under refinement) or tau proportional to the pixel diagonal (the
// rendered boundary band then shrinks with the grid).
struct TauPolicy {
  bool fixed = false;
  double value = 0.25;

  double resolve(double pixel_diagonal) const {
    return fixed ? value : std::max(value * pixel_diagonal, 1e-9);
  }
  static TauPolicy pitch_scaled(double factor = 0.25) {
    return {false, factor};
  }
  static TauPolicy fixed_tau(double tau) { return {true, tau}; }
};

struct PixelLabel {
  std::vector<int> nearest;
  bool boundary = false;
};

// Per-pixel site assignment over a 2-D scene. Row 0 is the top of the image;
// pixel centers sit at half-pitch offsets inside the domain box.
struct LabelGrid {
  int width = 0, height = 0;
  Vector domain_min, domain_max;
  double tau = 0.0;
  std::vector<PixelLabel> pixels;  // row-major

  const PixelLabel& at(int row, int col) const {
    return pixels[static_cast<size_t>(row) * static_cast<size_t>(width) +
                  static_cast<size_t>(col)];
  }
  Vector center(int row, int col) const;
};

// Classifies every pixel center with voronoi_assign. Deterministic; rows are
// evaluated in parallel subject to the VOROCELL_THREADS cap (0 or unset =
// hardware concurrency).
LabelGrid rasterize(const Scene& scene, int width, int height,
                    const TauPolicy& policy = TauPolicy::pitch_scaled());

// Fraction of pixels whose boundary flag is set.
double boundary_fraction(const LabelGrid& grid);

struct Rgb {
  unsigned char r, g, b;
};
using Palette = std::vector<Rgb>;

Palette default_palette(std::size_t n_sites);

// Binary portable pixmap (P6), one color per site index, boundary pixels in
// the designated final palette entry. Byte-identical for identical inputs.
void export_image(const LabelGrid& grid, const std::string& path,
                  const Palette& palette = {});

// Plain portable graymap (P2); boundary pixels are 0, site k maps to an
// evenly spaced gray level.
void export_graymap(const LabelGrid& grid, const std::string& path);

// SVG 1.1 document with one circular marker per boundary point, mapped from
// the domain box at 4-decimal precision.
void export_bisector_svg(const std::vector<BoundaryPoint>& points,
                         const Vector& box_min, const Vector& box_max,
                         const std::string& path);

}  // namespace vorocell

#endif  // VOROCELL_RASTER_HPP
