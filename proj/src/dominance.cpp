#include "vorocell/dominance.hpp"

#include <algorithm>
#include <limits>

namespace vorocell {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::StrictInterior:
      return "StrictInterior";
    case Verdict::NearBisector:
      return "NearBisector";
    case Verdict::StrictExterior:
      return "StrictExterior";
  }
  return "?";
}

double f_value(const Vector& x, const Site& p, const Site& a,
               const NormSpec& n, double tol) {
  return dist_point_site(x, p, n, tol) - dist_point_site(x, a, n, tol);
}

Classification classify(const Vector& x, const Site& p, const Site& a,
                        const NormSpec& n, double tau) {
  if (!(tau > 0.0)) throw DomainError("classify: tau must be positive");
  const double tol = std::clamp(tau / 4.0, 1e-12, 1e-9);
  const double f = f_value(x, p, a, n, tol);
  Verdict v = Verdict::NearBisector;
  if (f < -tau) v = Verdict::StrictInterior;
  if (f > tau) v = Verdict::StrictExterior;
  return {v, f, tau};
}

VoronoiAssignment voronoi_assign(const Vector& x, const Scene& scene,
                                 double tau) {
  if (!(tau > 0.0)) throw DomainError("voronoi_assign: tau must be positive");
  if (scene.sites.empty()) throw DomainError("voronoi_assign: no sites");
  const double tol = std::clamp(tau / 4.0, 1e-12, 1e-9);
  const int k = static_cast<int>(scene.sites.size());
  std::vector<double> dist(static_cast<size_t>(k));
  double dmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < k; ++i) {
    dist[static_cast<size_t>(i)] =
        dist_point_site(x, scene.sites[static_cast<size_t>(i)], scene.norm,
                        tol);
    dmin = std::min(dmin, dist[static_cast<size_t>(i)]);
  }
  VoronoiAssignment out;
  for (int i = 0; i < k; ++i)
    if (dist[static_cast<size_t>(i)] <= dmin + tau) out.nearest.push_back(i);
  out.on_boundary = out.nearest.size() >= 2;
  return out;
}

}  // namespace vorocell
