#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vorocell/norms.hpp"

using namespace vorocell;

namespace {

Eigen::VectorXd vec2(double x, double y) {
  Eigen::VectorXd v(2);
  v << x, y;
  return v;
}

Eigen::VectorXd random_vec(std::mt19937_64& rng, int dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = u(rng);
  return v;
}

const double kPs[] = {1.0, 1.5, 2.0, 2.718281828, 4.0};

}  // namespace

TEST_CASE("lp_norm matches hand values") {
  CHECK(lp_norm(vec2(3, 4), NormSpec::lp(2)) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(lp_norm(vec2(3, -4), NormSpec::linf()) == 4.0);
  CHECK(lp_norm(vec2(3, -4), NormSpec::lp(1)) == 7.0);
  // generic exponent branch agrees with the specialized ones
  CHECK(lp_norm(vec2(3, 4), NormSpec::lp(2.0 + 1e-13)) ==
        doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("NormSpec convexity flag and construction guard") {
  CHECK_THROWS_AS(NormSpec::lp(0.5), DomainError);
  CHECK(!NormSpec::lp(1).is_uniformly_convex());
  CHECK(NormSpec::lp(1.0000001).is_uniformly_convex());
  CHECK(NormSpec::lp(17).is_uniformly_convex());
  CHECK(!NormSpec::linf().is_uniformly_convex());
}

TEST_CASE("positive homogeneity and triangle inequality") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lambda(0.01, 50.0);
  for (double p : kPs) {
    const NormSpec n = p == 1.0 ? NormSpec::lp(1) : NormSpec::lp(p);
    for (int dim : {2, 3, 5, 8}) {
      for (int t = 0; t < 50; ++t) {
        const Eigen::VectorXd v = random_vec(rng, dim);
        const Eigen::VectorXd w = random_vec(rng, dim);
        const double l = lambda(rng);
        const double nv = lp_norm(v, n);
        CHECK(std::abs(lp_norm((l * v).eval(), n) - l * nv) <=
              1e-12 * std::max(1.0, l * nv));
        CHECK(lp_norm((v + w).eval(), n) <= nv + lp_norm(w, n) + 1e-12);
      }
    }
  }
  const NormSpec inf = NormSpec::linf();
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int t = 0; t < 100; ++t) {
    const Eigen::VectorXd v = random_vec(rng, 4), w = random_vec(rng, 4);
    CHECK(lp_norm((v + w).eval(), inf) <= lp_norm(v, inf) + lp_norm(w, inf) + 1e-12);
  }
}

TEST_CASE("clarkson_angle hand values and errors") {
  const NormSpec n2 = NormSpec::lp(2);
  CHECK(clarkson_angle(vec2(5, 0), vec2(2, 0), n2) == 0.0);
  CHECK(clarkson_angle(vec2(1, 0), vec2(-3, 0), n2) == 2.0);
  CHECK(clarkson_angle(vec2(1, 0), vec2(0, 1), n2) ==
        doctest::Approx(1.4142135623730951).epsilon(1e-14));
  CHECK_THROWS_AS(clarkson_angle(vec2(0, 0), vec2(1, 0), n2), ZeroVectorError);
  CHECK_THROWS_AS(clarkson_angle(vec2(1, 0), vec2(0, 0), n2), ZeroVectorError);
}

TEST_CASE("clarkson_angle scale invariance and range") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (double p : {1.0, 1.5, 2.0, 4.0}) {
    const NormSpec n = NormSpec::lp(p);
    for (int t = 0; t < 200; ++t) {
      const Eigen::VectorXd x = random_vec(rng, 3), y = random_vec(rng, 3);
      if (x.norm() < 1e-6 || y.norm() < 1e-6) continue;
      const double a = clarkson_angle(x, y, n);
      const double b =
          clarkson_angle((scale(rng) * x).eval(), (scale(rng) * y).eval(), n);
      CHECK(std::abs(a - b) <= 1e-12);
      CHECK(a >= 0.0);
      CHECK(a <= 2.0 + 1e-15);
    }
  }
}

TEST_CASE("modulus closed forms and domain") {
  const NormSpec n2 = NormSpec::lp(2);
  CHECK(modulus(n2, 0.0) == 0.0);
  CHECK(modulus(n2, 2.0) == doctest::Approx(1.0).epsilon(1e-14));
  // p = 3, eps = 1: 1 - (1 - (1/2)^3)^(1/3)
  CHECK(modulus(NormSpec::lp(3), 1.0) ==
        doctest::Approx(0.04353440861380542).epsilon(1e-12));
  CHECK(modulus(NormSpec::lp(1), 1.7) == 0.0);
  CHECK(modulus(NormSpec::linf(), 0.3) == 0.0);
  // lower-bound branch
  CHECK(modulus(NormSpec::lp(1.5), 1.0) == doctest::Approx(0.5 / 8.0));
  CHECK_THROWS_AS(modulus(n2, -0.1), DomainError);
  CHECK_THROWS_AS(modulus(n2, 2.1), DomainError);
}

TEST_CASE("modulus is zero at zero, positive and nondecreasing on [0,2]") {
  for (double p : {1.5, 2.0, 2.718281828, 3.0, 5.0}) {
    const NormSpec n = NormSpec::lp(p);
    double prev = modulus(n, 0.0);
    CHECK(prev == 0.0);
    for (int i = 1; i <= 100; ++i) {
      const double eps = 2.0 * i / 100.0;
      const double d = modulus(n, eps);
      CHECK(d > 0.0);
      CHECK(d >= prev);
      prev = d;
    }
  }
}

TEST_CASE("modulus_numeric against known values") {
  const NormSpec n2 = NormSpec::lp(2);
  // 1 - sqrt(3)/2 at eps = 1
  CHECK(modulus_numeric(n2, 1.0, 2048) ==
        doctest::Approx(0.1339745962155614).epsilon(1e-3));
  CHECK(modulus_numeric(NormSpec::linf(), 1.0, 2048) == 0.0);
  CHECK(modulus_numeric(n2, 2.0, 2048) == doctest::Approx(1.0).epsilon(1e-3));
  CHECK_THROWS_AS(modulus_numeric(n2, 0.0, 2048), DomainError);
  CHECK_THROWS_AS(modulus_numeric(n2, 1.0, 8), DomainError);
}

TEST_CASE("analytic modulus is sound against the brute-force oracle") {
  // Unit-level soundness run at a coarse grid; the acceptance suite repeats
  // this at resolution 2048. The numeric minimum is taken over a subset of
  // the true constraint set, so it can only overestimate.
  for (double p : {1.5, 2.0, 2.718281828, 3.0, 5.0}) {
    const NormSpec n = NormSpec::lp(p);
    for (double eps : {0.25, 0.5, 1.0, 1.5, 2.0}) {
      CHECK(modulus(n, eps) <= modulus_numeric(n, eps, 512) + 1e-3);
    }
  }
}

TEST_CASE("ModulusProfile sources") {
  CHECK(ModulusProfile::analytic(NormSpec::lp(3)).source ==
        ModulusSource::ClosedForm);
  CHECK(ModulusProfile::analytic(NormSpec::lp(1.5)).source ==
        ModulusSource::LowerBound);
  CHECK(ModulusProfile::analytic(NormSpec::lp(1)).source == ModulusSource::Zero);
  CHECK(ModulusProfile::analytic(NormSpec::linf()).source ==
        ModulusSource::Zero);
  const auto prof = ModulusProfile::analytic(NormSpec::lp(2));
  CHECK(prof(1.0) == doctest::Approx(0.1339745962155614).epsilon(1e-12));
  const auto num = ModulusProfile::numeric_estimate(NormSpec::lp(2), 256);
  CHECK(num(0.0) == 0.0);
  CHECK(prof(1.0) <= num(1.0) + 1e-3);
}

TEST_CASE("strong triangle residual hand cases") {
  const NormSpec n2 = NormSpec::lp(2);
  // collinear same-direction vectors achieve equality
  CHECK(strong_triangle_residual(vec2(1, 0), vec2(1, 0), n2) ==
        doctest::Approx(0.0).epsilon(1e-15));
  // orthogonal unit pair, value frozen from direct evaluation of the bound
  CHECK(strong_triangle_residual(vec2(1, 0), vec2(0, 1), n2) ==
        doctest::Approx(0.2813045676720518).epsilon(1e-12));
  // near-degenerate sum
  CHECK(strong_triangle_residual(vec2(1, 0), vec2(-1, 1e-6), n2) >= -1e-12);
  CHECK_THROWS_AS(strong_triangle_residual(vec2(0, 0), vec2(1, 0), n2),
                  ZeroVectorError);
  CHECK_THROWS_AS(strong_triangle_residual(vec2(1, 0), vec2(-1, 0), n2),
                  ZeroSumError);
}

TEST_CASE("strong triangle residual is nonnegative on random pairs") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> scale(0.5, 2.0);
  for (double p : {1.5, 2.0, 2.718281828, 4.0}) {
    const NormSpec n = NormSpec::lp(p);
    for (int t = 0; t < 2000; ++t) {
      const int dim = 2 + t % 7;
      const Eigen::VectorXd x1 = random_vec(rng, dim);
      const Eigen::VectorXd x2 = (scale(rng) * random_vec(rng, dim)).eval();
      if (lp_norm(x1, n) <= 1e-9 || lp_norm(x2, n) <= 1e-9 ||
          lp_norm((x1 + x2).eval(), n) <= 1e-9)
        continue;
      CHECK(strong_triangle_residual(x1, x2, n) >= -1e-12);
    }
  }
}
