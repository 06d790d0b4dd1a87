#include "vorocell/bisector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vorocell/sampling.hpp"

namespace vorocell {

const char* to_string(ProbeVerdict v) {
  switch (v) {
    case ProbeVerdict::ThinEvidence:
      return "ThinEvidence";
    case ProbeVerdict::FatEvidence:
      return "FatEvidence";
    case ProbeVerdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

namespace {

double eval_tol(double tol) { return std::clamp(tol / 8.0, 1e-13, 1e-10); }

bool inside_box(const Vector& x, const Vector& lo, const Vector& hi) {
  return (x.array() >= lo.array()).all() && (x.array() <= hi.array()).all();
}

}  // namespace

BoundaryPoint bisect_boundary(const Vector& x_in, const Vector& x_out,
                              const Site& p, const Site& a, const NormSpec& n,
                              double tol) {
  if (!(tol > 0.0)) throw DomainError("bisect_boundary: tol must be positive");
  const double ftol = eval_tol(tol);
  const double f_in = f_value(x_in, p, a, n, ftol);
  const double f_out = f_value(x_out, p, a, n, ftol);
  if (!(f_in < 0.0 && f_out > 0.0))
    throw NoSignChangeError("bisect_boundary: endpoints must straddle f = 0");

  double lo = 0.0, hi = 1.0;
  const Vector delta = x_out - x_in;
  const double seg_len = delta.norm();
  // f is 2-Lipschitz, so a bracket of width tol/4 pins |f| below tol/2.
  const double t_tol = std::max(tol / (4.0 * std::max(seg_len, kZeroTol)),
                                1e-15);
  Vector mid = x_in;
  double fm = f_in;
  while (hi - lo > t_tol) {
    const double t = 0.5 * (lo + hi);
    mid = x_in + t * delta;
    fm = f_value(mid, p, a, n, ftol);
    if (std::abs(fm) <= 0.5 * tol) break;
    if (fm < 0.0)
      lo = t;
    else
      hi = t;
  }
  if (std::abs(fm) > 0.5 * tol) {
    const double t = 0.5 * (lo + hi);
    mid = x_in + t * delta;
    fm = f_value(mid, p, a, n, ftol);
  }
  return {mid, fm, (hi - lo) * seg_len};
}

std::optional<BoundaryPoint> ray_shoot(const Vector& origin,
                                       const Vector& direction,
                                       const Vector& box_min,
                                       const Vector& box_max, const Site& p,
                                       const Site& a, const NormSpec& n,
                                       double tol) {
  if (!(tol > 0.0)) throw DomainError("ray_shoot: tol must be positive");
  const double dir_norm = direction.norm();
  if (dir_norm <= kZeroTol)
    throw DomainError("ray_shoot: direction must be nonzero");
  const double ftol = eval_tol(tol);
  const double f0 = f_value(origin, p, a, n, ftol);
  if (f0 >= 0.0)
    throw BadOriginError("ray_shoot: origin must satisfy f < 0");

  const Vector unit = direction / dir_norm;
  const double step = (box_max - box_min).norm() / 256.0;
  Vector prev = origin;
  for (int k = 1; k <= 1024; ++k) {
    const Vector x = origin + (k * step) * unit;
    if (!inside_box(x, box_min, box_max)) return std::nullopt;
    const double fx = f_value(x, p, a, n, ftol);
    if (std::abs(fx) <= tol) return BoundaryPoint{x, fx, step};
    if (fx > 0.0) return bisect_boundary(prev, x, p, a, n, tol);
    prev = x;
  }
  return std::nullopt;
}

FatProbeReport fat_probe(const Vector& z, double radius, int n_samples,
                         const Site& p, const Site& a, const NormSpec& n,
                         double tau, std::uint64_t seed) {
  if (!(radius > 0.0)) throw DomainError("fat_probe: radius must be positive");
  if (n_samples < 10) throw DomainError("fat_probe: need at least 10 samples");
  if (classify(z, p, a, n, tau).verdict != Verdict::NearBisector)
    throw NotOnBisectorError("fat_probe: center is not a bisector point");

  FatProbeReport rep{z, radius, n_samples, 0, 0, 0,
                     ProbeVerdict::Inconclusive};
  for (const Vector& x : ball_samples(z, radius, n_samples, seed)) {
    switch (classify(x, p, a, n, tau).verdict) {
      case Verdict::StrictInterior:
        ++rep.count_neg;
        break;
      case Verdict::NearBisector:
        ++rep.count_zero;
        break;
      case Verdict::StrictExterior:
        ++rep.count_pos;
        break;
    }
  }
  if (rep.count_neg > 0 && rep.count_pos > 0)
    rep.verdict = ProbeVerdict::ThinEvidence;
  else if (rep.count_zero == n_samples)
    rep.verdict = ProbeVerdict::FatEvidence;
  return rep;
}

std::vector<BoundaryPoint> harvest_boundary_points(
    const Site& p, const Site& a, const Vector& box_min, const Vector& box_max,
    const NormSpec& n, int want, double tol, std::uint64_t seed) {
  const Eigen::Index dim = box_min.size();
  std::vector<Vector> anchors = representative_points(p, dim);
  std::vector<BoundaryPoint> out;
  if (anchors.empty() || want <= 0) return out;

  const auto try_ray = [&](const Vector& anchor, const Vector& dir) {
    try {
      if (auto bp = ray_shoot(anchor, dir, box_min, box_max, p, a, n, tol))
        out.push_back(std::move(*bp));
    } catch (const BadOriginError&) {
      // Anchors shared with A (overlapping sites) have f >= 0; skip them.
    }
  };

  if (dim == 2) {
    const double two_pi = 6.283185307179586;
    const int per_round = std::max(want, 64);
    for (int round = 0; round < 16 && static_cast<int>(out.size()) < want;
         ++round) {
      // van der Corput offsets interleave new directions between old ones
      double offset = 0.0, denom = 0.5;
      for (int bits = round; bits > 0; bits >>= 1, denom *= 0.5)
        if (bits & 1) offset += denom;
      for (int i = 0;
           i < per_round && static_cast<int>(out.size()) < want; ++i) {
        const double theta = two_pi * (i + offset) / per_round;
        Vector dir(2);
        dir << std::cos(theta), std::sin(theta);
        try_ray(anchors[static_cast<size_t>((i + round) % anchors.size())],
                dir);
      }
    }
    return out;
  }

  std::mt19937_64 rng(seed ^ 0xa0761d6478bd642fULL);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int budget = 32 * want;
  for (int i = 0; i < budget && static_cast<int>(out.size()) < want; ++i) {
    Vector dir(dim);
    for (Eigen::Index j = 0; j < dim; ++j) dir(j) = gauss(rng);
    if (dir.norm() <= kZeroTol) continue;
    try_ray(anchors[static_cast<size_t>(i) % anchors.size()], dir);
  }
  return out;
}

std::optional<Vector> escape_point(const Vector& z, const Site& a,
                                   const Site& p, const NormSpec& n,
                                   std::optional<EscapeSchedule> schedule,
                                   double tau) {
  if (classify(z, p, a, n, tau).verdict != Verdict::NearBisector)
    throw NotOnBisectorError("escape_point: z is not a bisector point");
  const Vector near = approx_nearest_point(z, a, n);
  const Vector toward = near - z;
  const double len = toward.norm();
  if (len <= kZeroTol) return std::nullopt;
  const Vector unit = toward / len;

  EscapeSchedule sched =
      schedule.value_or(EscapeSchedule{dist_point_site(z, a, n) / 10.0, 16});
  double s = sched.initial_step;
  for (int k = 0; k <= sched.halvings; ++k, s *= 0.5) {
    const Vector x = z + s * unit;
    if (f_value(x, p, a, n, 1e-10) > 0.0) return x;
  }
  return std::nullopt;
}

ProofRadius proof_radius(double sigma, double eps, double d_pa, double d_za,
                         const NormSpec& n) {
  if (!(sigma > 0.0 && eps > 0.0 && d_pa > 0.0 && d_za >= 0.0))
    throw DomainError("proof_radius: hypothesis requires positive inputs");
  const double witness = d_pa / (4.0 * (sigma + d_za));
  if (!(witness < 2.0))
    throw DomainError("proof_radius: delta argument reached 2");
  const double r =
      std::min({sigma, d_pa / 4.0, (eps / 2.0) * modulus(n, witness)});
  return {r, witness};
}

}  // namespace vorocell
