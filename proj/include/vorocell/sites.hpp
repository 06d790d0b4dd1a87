#ifndef VOROCELL_SITES_HPP
#define VOROCELL_SITES_HPP

#include <Eigen/Core>

#include <array>
#include <variant>
#include <vector>

#include "vorocell/norms.hpp"

namespace vorocell {

using Vector = Eigen::VectorXd;

// Finite point cloud, one point per column.
struct PointSet {
  Eigen::MatrixXd points;  // dim x count, count >= 1
};

// Finite set of closed segments [a.col(i), b.col(i)] with distinct endpoints.
struct SegmentSet {
  Eigen::MatrixXd a, b;  // dim x count
};

// The two closed-form l2 sequence sites:
//   role P is {e1} union {((n+1)/n) e_n : n >= 2},
//   role A is {((n+2)/n) e_n : n >= 2}.
// A query vector of dimension d stands for the first d coordinates of an l2
// sequence (all later coordinates zero). Distances are exact infima: the tail
// contributes sqrt(|x|^2 + 1), approached but never attained.
enum class SequenceRole { P, A };
struct SequenceSite {
  SequenceRole role;
};

using SitePrimitive = std::variant<PointSet, SegmentSet, SequenceSite>;

// A site is a finite union of primitives; its distance field is the pointwise
// minimum over the union.
struct Site {
  std::vector<SitePrimitive> primitives;
};

// Bounded axis-aligned box domain, a norm, and the sites living inside it.
struct Scene {
  Eigen::Index dimension = 0;
  Vector domain_min, domain_max;
  std::vector<Site> sites;
  NormSpec norm;
};

PointSet make_points2d(const std::vector<std::array<double, 2>>& pts);
// One row {ax, ay, bx, by} per segment.
SegmentSet make_segments2d(const std::vector<std::array<double, 4>>& segs);

inline Site site_of(SitePrimitive p) { return Site{{std::move(p)}}; }

// Union of every site except `exclude` (pass -1 to keep all).
Site union_of(const std::vector<Site>& sites, int exclude = -1);

// Throws DomainError / DimensionMismatch on a malformed scene: empty domain,
// dimension conflicts, empty site lists, or sequence sites outside the l2
// norm.
void validate(const Scene& scene);

// d(x, S): exact for point sets and sequence sites; within tol of the true
// minimum for segments (golden-section line search per segment).
double dist_point_site(const Vector& x, const Site& s, const NormSpec& n,
                       double tol = 1e-9);

// d(P, A) = inf over pairs. Exact for point/sequence combinations; within tol
// for segment pairs (nested golden-section searches over the jointly convex
// two-parameter objective, backstopped by a 64 x 64 grid scan).
double site_separation(const Site& p, const Site& a, const NormSpec& n,
                       double tol = 1e-9);

// True iff site_separation >= tau_sep. Gates every claim that relies on the
// sites being positively separated.
bool check_positive_separation(const Site& p, const Site& a, const NormSpec& n,
                               double tau_sep);

// A point of S within eta of realizing d(x, S), for sites that admit one
// (point sets exactly; segments within eta; sequence sites return the best
// explicit element, which can be far from the unattained infimum).
Vector approx_nearest_point(const Vector& x, const Site& s, const NormSpec& n,
                            double eta = 1e-9);

// Concrete members of the site usable as ray anchors: the points of point
// sets, segment endpoints, and the lowest-index explicit sequence elements
// representable in the given dimension.
std::vector<Vector> representative_points(const Site& s, Eigen::Index dim);

}  // namespace vorocell

#endif  // VOROCELL_SITES_HPP
