#pragma once

#include <vector>

#include "vclab/graph.hpp"

namespace vclab {

struct Matching {
  // partner[v] = matched vertex or -1
  std::vector<int> partner;
  std::int64_t size = 0;

  std::vector<std::pair<int, int>> edges() const;
};

using VertexCover = std::vector<int>;  // sorted vertex list

// Maximum matching on a properly 2-coloured graph. Throws InputError if the
// colouring is not a proper bipartition.
Matching hopcroft_karp(const Graph& g, const Colouring& c);

// Minimum vertex cover from a maximum matching via alternating reachability
// from unmatched white vertices: cover = (white \ Z) u (black n Z).
// Checks |cover| == |matching| and cover validity internally.
VertexCover koenig_cover(const Graph& g, const Colouring& c, const Matching& m);

// hopcroft_karp + koenig_cover.
VertexCover opt_2vc(const Graph& g, const Colouring& c);

bool verify_cover(const Graph& g, const std::vector<int>& cover);

}  // namespace vclab
