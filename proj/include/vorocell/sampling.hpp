#ifndef VOROCELL_SAMPLING_HPP
#define VOROCELL_SAMPLING_HPP

#include <cstdint>
#include <vector>

#include "vorocell/sites.hpp"

namespace vorocell {

// Deterministic quasi-uniform samples of the closed Euclidean ball
// B(center, radius). In the plane this is a golden-angle spiral whose phase
// is derived from the seed; in other dimensions a seeded generator draws
// direction/radius pairs. Identical arguments always yield identical samples.
std::vector<Vector> ball_samples(const Vector& center, double radius, int n,
                                 std::uint64_t seed = 0);

}  // namespace vorocell

#endif  // VOROCELL_SAMPLING_HPP
