#pragma once

// Deterministic test-instance source for 5c-triangulations.
//
// Growth moves that keep the 5c property: replacing a fan of three faces
// around a vertex by a five-star on a new vertex (the new vertex gets
// degree 5), and diagonal flips. A face split with a degree-3 vertex can
// never be used here: the split face becomes a separating triangle, and
// more generally every inner vertex of a 5c-triangulation has degree >= 5.
// Base instances are pentagonal onions (outer pentagon, k concentric
// 5-rings, hub), which cover n = 5k+6; insertions cover the remainders.
// No 5c-triangulation exists for n in {7,8,9,10}.

#include <cstdint>

#include "fivec/triangulation.hpp"

namespace fivec {

/// Pentagonal onion with k >= 0 rings (k=0 is the wheel W5); n = 5k+6.
RotationSystem onion(int rings);

/// Deterministic 5c instance with n_target vertices; `flips` is the number
/// of attempted diagonal flips applied after growth. Throws GenerationFailed
/// when the target size is unreachable or the move budget runs out.
FiveTriangulation generate_random_5c(int n_target, std::uint64_t seed, int flips);

}  // namespace fivec
