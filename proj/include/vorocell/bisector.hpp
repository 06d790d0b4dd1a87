#ifndef VOROCELL_BISECTOR_HPP
#define VOROCELL_BISECTOR_HPP

#include <cstdint>
#include <optional>

#include "vorocell/dominance.hpp"

namespace vorocell {

// A point with |f| <= the requested tolerance, located between bracket
// endpoints of opposite sign.
struct BoundaryPoint {
  Vector point;
  double f_residual;
  double bracket_width;
};

enum class ProbeVerdict { ThinEvidence, FatEvidence, Inconclusive };

const char* to_string(ProbeVerdict v);

// Sign census of a ball around a near-bisector point. ThinEvidence means both
// strict signs appear; FatEvidence means every sample stayed inside the
// equality band; anything else is inconclusive.
struct FatProbeReport {
  Vector center;
  double radius;
  int n_samples;
  int count_neg, count_zero, count_pos;
  ProbeVerdict verdict;
};

// Interval bisection between f(x_in) < 0 and f(x_out) > 0.
BoundaryPoint bisect_boundary(const Vector& x_in, const Vector& x_out,
                              const Site& p, const Site& a, const NormSpec& n,
                              double tol);

// Marches from origin (f < 0) along direction in steps of the box diagonal /
// 256 until f turns positive (then bisects) or the box is exited (nullopt).
// A marched sample landing inside the |f| <= tol band is returned directly.
std::optional<BoundaryPoint> ray_shoot(const Vector& origin,
                                       const Vector& direction,
                                       const Vector& box_min,
                                       const Vector& box_max, const Site& p,
                                       const Site& a, const NormSpec& n,
                                       double tol);

FatProbeReport fat_probe(const Vector& z, double radius, int n_samples,
                         const Site& p, const Site& a, const NormSpec& n,
                         double tau, std::uint64_t seed = 0);

// Shoots rays from the representative points of P across the box until
// `want` boundary points are found (or the direction budget runs out).
// Deterministic in the plane; seeded directions elsewhere.
std::vector<BoundaryPoint> harvest_boundary_points(
    const Site& p, const Site& a, const Vector& box_min, const Vector& box_max,
    const NormSpec& n, int want, double tol, std::uint64_t seed = 0);

// Geometric step schedule {r0, r0/2, ..., r0 / 2^halvings} for escape_point.
struct EscapeSchedule {
  double initial_step;
  int halvings = 16;
};

// Walks from a bisector point z toward (an approximate nearest point of) A
// and returns the first probe with f > 0. An empty result is a legitimate
// outcome: when no near-minimizer of d(z, A) exists the escape direction is
// unavailable and every probe can stay inside dom(P, A).
std::optional<Vector> escape_point(const Vector& z, const Site& a,
                                   const Site& p, const NormSpec& n,
                                   std::optional<EscapeSchedule> schedule = {},
                                   double tau = 1e-9);

// r = min{sigma, dPA/4, (eps/2) delta(dPA / (4 (sigma + dzA)))} together with
// the delta argument, which must stay below 2 (and stays below 0.5 whenever
// dPA <= 2 dzA, the regime a bisector point guarantees).
struct ProofRadius {
  double value;
  double witness;
};

ProofRadius proof_radius(double sigma, double eps, double d_pa, double d_za,
                         const NormSpec& n);

}  // namespace vorocell

#endif  // VOROCELL_BISECTOR_HPP
