#ifndef VOROCELL_DOMINANCE_HPP
#define VOROCELL_DOMINANCE_HPP

#include <vector>

#include "vorocell/sites.hpp"

namespace vorocell {

enum class Verdict { StrictInterior, NearBisector, StrictExterior };

const char* to_string(Verdict v);

// Trichotomy of a point against dom(P, A) at a measured tolerance:
// f < -tau strict interior, |f| <= tau near the bisector, f > tau exterior.
struct Classification {
  Verdict verdict;
  double f_value;
  double tolerance;
};

// f(x) = d(x, P) - d(x, A); 2-Lipschitz in x. tol bounds the per-distance
// evaluation error (segments only; point and sequence distances are exact).
double f_value(const Vector& x, const Site& p, const Site& a,
               const NormSpec& n, double tol = 1e-9);

Classification classify(const Vector& x, const Site& p, const Site& a,
                        const NormSpec& n, double tau);

// Indices of the sites attaining the minimum distance within tau, and whether
// the point lies on a cell boundary (two or more sites tie). The full tie set
// is always returned.
struct VoronoiAssignment {
  std::vector<int> nearest;
  bool on_boundary;
};

VoronoiAssignment voronoi_assign(const Vector& x, const Scene& scene,
                                 double tau);

}  // namespace vorocell

#endif  // VOROCELL_DOMINANCE_HPP
