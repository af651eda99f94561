#pragma once

#include <cstdint>

#include "vclab/graph.hpp"

namespace vclab {

// Random connected simple 4-regular graph on n >= 6 vertices: the union of
// two uniformly random Hamiltonian cycles, resampled until the union is
// simple (no shared edges). Deterministic per seed. Throws InternalError if
// 1000 attempts all collide (never observed for n >= 6).
Graph random_4regular(int n, std::uint64_t seed);

}  // namespace vclab
