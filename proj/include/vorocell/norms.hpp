#ifndef VOROCELL_NORMS_HPP
#define VOROCELL_NORMS_HPP

#include <Eigen/Core>

#include <cassert>
#include <cmath>
#include <limits>

#include "vorocell/errors.hpp"

namespace vorocell {

// Absolute tolerance used for comparisons against zero when an operation does
// not expose its own tolerance parameter.
inline constexpr double kZeroTol = 1e-12;

// Selects the lp norm governing all distances. p = +infinity encodes the max
// norm. The space is uniformly convex exactly for 1 < p < infinity.
struct NormSpec {
  double p = 2.0;

  static NormSpec lp(double p) {
    if (!(p >= 1.0)) throw DomainError("NormSpec: p must satisfy p >= 1");
    return NormSpec{p};
  }
  static NormSpec linf() {
    return NormSpec{std::numeric_limits<double>::infinity()};
  }

  bool is_inf() const { return std::isinf(p); }
  bool is_uniformly_convex() const { return p > 1.0 && std::isfinite(p); }
};

// (sum |v_i|^p)^(1/p), max |v_i| for p = inf. Scaled by the largest coordinate
// in the generic branch so that homogeneity survives large magnitude spreads.
template <typename Derived>
double lp_norm(const Eigen::MatrixBase<Derived>& v, const NormSpec& n) {
  assert(v.size() > 0);
  if (n.is_inf()) return v.derived().cwiseAbs().maxCoeff();
  if (n.p == 1.0) return v.derived().cwiseAbs().sum();
  if (n.p == 2.0) return v.derived().norm();
  const double m = v.derived().cwiseAbs().maxCoeff();
  if (m == 0.0) return 0.0;
  const double s = (v.derived().cwiseAbs() / m).array().pow(n.p).sum();
  return m * std::pow(s, 1.0 / n.p);
}

template <typename D1, typename D2>
double lp_distance(const Eigen::MatrixBase<D1>& a,
                   const Eigen::MatrixBase<D2>& b, const NormSpec& n) {
  return lp_norm(a.derived() - b.derived(), n);
}

// Distance between the directions of two non-zero vectors, |x/|x| - y/|y||.
// Lies in [0, 2]; invariant under positive scaling of either argument.
template <typename D1, typename D2>
double clarkson_angle(const Eigen::MatrixBase<D1>& x,
                      const Eigen::MatrixBase<D2>& y, const NormSpec& n) {
  const double nx = lp_norm(x, n);
  const double ny = lp_norm(y, n);
  if (nx <= kZeroTol || ny <= kZeroTol)
    throw ZeroVectorError("clarkson_angle: zero vector has no direction");
  return lp_norm(x.derived() / nx - y.derived() / ny, n);
}

// delta(eps) for the lp norm: exact closed form for p >= 2, the classical
// quadratic lower bound (p-1) eps^2 / 8 for 1 < p < 2, zero for p in {1, inf}.
// Every branch is a sound under-estimate of the true modulus of convexity,
// which is what the strong triangle inequality requires.
double modulus(const NormSpec& n, double eps);

// Brute-force estimate of the modulus over unit-vector pairs in the 2-D lp
// plane, sampled uniformly in angle at the given resolution. Serves as the
// independent oracle for modulus(). Returns 1 when no sampled pair satisfies
// the separation constraint.
double modulus_numeric(const NormSpec& n, double eps, int resolution);

enum class ModulusSource { ClosedForm, LowerBound, Zero, NumericEstimate };

// delta evaluator with a record of where its values come from. Analytic
// profiles are sound lower bounds; numeric profiles are grid estimates.
struct ModulusProfile {
  ModulusSource source;
  NormSpec norm;
  int resolution = 0;  // numeric estimates only

  double operator()(double eps) const {
    if (source == ModulusSource::NumericEstimate)
      return eps == 0.0 ? 0.0 : modulus_numeric(norm, eps, resolution);
    return modulus(norm, eps);
  }

  static ModulusProfile analytic(const NormSpec& n) {
    if (!n.is_uniformly_convex()) return {ModulusSource::Zero, n, 0};
    if (n.p >= 2.0) return {ModulusSource::ClosedForm, n, 0};
    return {ModulusSource::LowerBound, n, 0};
  }
  static ModulusProfile numeric_estimate(const NormSpec& n, int resolution) {
    return {ModulusSource::NumericEstimate, n, resolution};
  }
};

// Slack of Clarkson's strong triangle inequality,
//   (|x1| + |x2| - 2 delta(a1)|x1| - 2 delta(a2)|x2|) - |x1 + x2|,
// where a_l is the angle between x_l and x1 + x2. Nonnegative whenever delta
// is a sound modulus lower bound.
template <typename D1, typename D2>
double strong_triangle_residual(const Eigen::MatrixBase<D1>& x1,
                                const Eigen::MatrixBase<D2>& x2,
                                const NormSpec& n) {
  const double n1 = lp_norm(x1, n);
  const double n2 = lp_norm(x2, n);
  if (n1 <= kZeroTol || n2 <= kZeroTol)
    throw ZeroVectorError("strong_triangle_residual: zero operand");
  const auto s = (x1.derived() + x2.derived()).eval();
  const double ns = lp_norm(s, n);
  if (ns <= kZeroTol)
    throw ZeroSumError("strong_triangle_residual: x1 + x2 vanishes");
  // Angles can land a couple of ulps above 2; clamp into delta's domain.
  const double a1 = std::min(clarkson_angle(x1, s, n), 2.0);
  const double a2 = std::min(clarkson_angle(x2, s, n), 2.0);
  const double bound =
      n1 + n2 - 2.0 * modulus(n, a1) * n1 - 2.0 * modulus(n, a2) * n2;
  return bound - ns;
}

}  // namespace vorocell

#endif  // VOROCELL_NORMS_HPP
