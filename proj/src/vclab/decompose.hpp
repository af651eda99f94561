#pragma once

#include <cstdint>

#include "vclab/graph.hpp"
#include "vclab/matching.hpp"

namespace vclab {

// Low-diameter decomposition: a subset S of V split into blocks such that
// every block has weak diameter (distances measured in the full graph) at
// most radius, and V \ S is small in expectation.
struct Decomposition {
  std::vector<int> block;  // per-vertex block id, -1 for removed vertices
  std::vector<std::vector<int>> blocks;
  std::vector<int> removed;  // sorted
  int radius = 0;            // bound the construction enforces
  double epsilon = 0.0;
};

struct DecomposeParams {
  double epsilon = 0.1;
  // radius r = ceil(radius_c * ln(n) / epsilon); radius_c = 2 passes the
  // desk-scale retention target and is exposed as a knob
  double radius_c = 2.0;
  // shift rate beta = beta_c * epsilon
  double beta_c = 0.5;
};

// Exponential-shift clustering: every vertex draws delta_v ~ Exp(beta) and
// joins the centre maximizing delta_c - dist(c, v), restricted to
// dist(c, v) <= r/2 so the radius bound is unconditional; endpoints of
// inter-block edges are then removed from S. Deterministic per seed.
Decomposition ls_decompose(const Graph& g, const DecomposeParams& params, std::uint64_t seed);

struct ApproxResult {
  VertexCover cover;
  Decomposition decomposition;
  std::int64_t component_opt_total = 0;  // sum of per-component exact optima
};

// (1 + eps)-style scheme: decompose, solve each component of G[S] exactly
// (Koenig duality), and add all removed vertices. The cover is always valid;
// its size is at most OPT(G[S]) + |V \ S|.
ApproxResult approx_2vc(const Graph& g, const Colouring& c, const DecomposeParams& params, std::uint64_t seed);

// Largest distance in g between two vertices of the same block; 0 if no
// block has two vertices. Exhaustive (BFS from every vertex of S).
int max_weak_diameter(const Graph& g, const Decomposition& d);

}  // namespace vclab
