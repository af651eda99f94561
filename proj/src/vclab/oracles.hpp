#pragma once

// Independent brute-force solvers used to cross-check the fast
// implementations. Deliberately naive: different algorithms, different
// failure modes.

#include <cstdint>
#include <vector>

#include "vclab/gadgets.hpp"
#include "vclab/graph.hpp"

namespace vclab {

// Bitmask DP over vertices; any graph, n <= 22.
std::int64_t brute_max_matching(const Graph& g);

// Full subset scan; any graph, n <= cutoff <= 24.
std::int64_t brute_min_vc_mask(const Graph& g, int cutoff = 20);

// Edge branching with a greedy-matching lower bound; handles the small
// reduction instances (up to ~48 vertices) that the subset scan cannot.
std::int64_t brute_min_vertex_cover(const Graph& g, int cutoff = 48);

// Smallest k admitting a proper k-colouring, by backtracking; n <= 12.
int brute_chromatic(const Graph& g);

// P(Binomial(n, p) >= k), direct summation.
double binom_upper_tail(std::int64_t n, double p, std::int64_t k);

struct BipartiteSample {
  Graph graph;
  Colouring colouring;
};

// whites vertices 0..whites-1, blacks after; each cross pair is an edge
// independently with probability edge_prob.
BipartiteSample random_bipartite(int whites, int blacks, double edge_prob, std::uint64_t seed);

struct Delta3Check {
  std::int64_t opt_brute = 0;
  std::int64_t expected = 0;       // 2n
  bool opt_ok = false;
  int min_class_size = 0;          // smallest valid homogeneous role class
  std::vector<int> min_classes;    // role masks: bit 0 w1, 1 b1, 2 w2, 3 b2
  bool classes_ok = false;         // every minimum class omits b1 or w2

  bool passes() const { return opt_ok && classes_ok; }
};

// Validates the path-gadget wiring on the all-red instance: the brute-force
// optimum must be 2n and every minimum homogeneous cover must omit the middle
// black or the middle white vertex. Source size <= 10.
Delta3Check verify_delta3_reconstruction(const BalancedDigraph& d);

}  // namespace vclab
