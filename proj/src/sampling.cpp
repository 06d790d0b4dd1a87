#include "vorocell/sampling.hpp"

#include <cmath>
#include <random>

namespace vorocell {

std::vector<Vector> ball_samples(const Vector& center, double radius, int n,
                                 std::uint64_t seed) {
  std::vector<Vector> out;
  out.reserve(static_cast<size_t>(std::max(n, 0)));
  const Eigen::Index dim = center.size();
  if (dim == 2) {
    constexpr double golden_angle = 2.3999632297286533;  // pi (3 - sqrt 5)
    const double phase =
        6.283185307179586 * std::fmod(static_cast<double>(seed) * 0.618033988749895, 1.0);
    for (int i = 0; i < n; ++i) {
      const double r = radius * std::sqrt((i + 0.5) / n);
      const double t = phase + golden_angle * i;
      Vector x = center;
      x(0) += r * std::cos(t);
      x(1) += r * std::sin(t);
      out.push_back(std::move(x));
    }
    return out;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < n; ++i) {
    Vector dir(dim);
    double norm2 = 0.0;
    do {
      for (Eigen::Index j = 0; j < dim; ++j) dir(j) = gauss(rng);
      norm2 = dir.squaredNorm();
    } while (norm2 <= 0.0);
    const double r =
        radius * std::pow(unit(rng), 1.0 / static_cast<double>(dim));
    out.push_back(center + dir * (r / std::sqrt(norm2)));
  }
  return out;
}

}  // namespace vorocell
