#ifndef VOROCELL_GOLDEN_SECTION_HPP
#define VOROCELL_GOLDEN_SECTION_HPP

namespace vorocell {

struct GoldenResult {
  double x;
  double value;
};

// Golden-section minimization over [lo, hi], returning the best sampled point
// (endpoints included). For a convex objective the bracket always contains a
// minimizer, so once its width drops below x_tol the returned value is within
// Lip(f) * x_tol of the true minimum; flat bottoms (p = 1 or p = inf segment
// objectives) shrink toward the plateau instead of past it.
template <typename F>
GoldenResult golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                     int max_iter = 200) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  GoldenResult best{a, f(a)};
  const double fb = f(b);
  if (fb < best.value) best = {b, fb};

  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  if (fc < best.value) best = {c, fc};
  if (fd < best.value) best = {d, fd};

  for (int it = 0; it < max_iter && (b - a) > x_tol; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
      if (fc < best.value) best = {c, fc};
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
      if (fd < best.value) best = {d, fd};
    }
  }
  return best;
}

}  // namespace vorocell

#endif  // VOROCELL_GOLDEN_SECTION_HPP
