#include "doctest.h"
#include "vclab/matching.hpp"
#include "vclab/oracles.hpp"

using namespace vclab;

namespace {

Colouring alternating(int n) {
  Colouring c(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) c[static_cast<std::size_t>(v)] = v % 2 ? Colour::black : Colour::white;
  return c;
}

}  // namespace

TEST_CASE("matching on closed-form instances") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  Matching m = hopcroft_karp(p4, alternating(4));
  CHECK(m.size == 2);
  CHECK(m.edges().size() == 2);

  std::vector<std::pair<int, int>> c6;
  for (int i = 0; i < 6; ++i) c6.emplace_back(std::min(i, (i + 1) % 6), std::max(i, (i + 1) % 6));
  Graph cyc = Graph::from_edges(6, c6);
  CHECK(hopcroft_karp(cyc, alternating(6)).size == 3);

  // star: one centre, five leaves
  Graph star = Graph::from_edges(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  Colouring sc(6, Colour::black);
  sc[0] = Colour::white;
  Matching sm = hopcroft_karp(star, sc);
  CHECK(sm.size == 1);
  VertexCover scover = koenig_cover(star, sc, sm);
  CHECK(scover == VertexCover{0});
}

TEST_CASE("improper colourings are rejected") {
  Graph tri = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(hopcroft_karp(tri, Colouring(3, Colour::white)), InputError);
  Colouring c = {Colour::white, Colour::black, Colour::black};
  CHECK_THROWS_AS(hopcroft_karp(tri, c), InputError);
}

TEST_CASE("verify_cover") {
  Graph p4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(verify_cover(p4, {1, 2}));
  CHECK(verify_cover(p4, {1, 3}));
  CHECK(verify_cover(p4, {0, 1, 2, 3}));
  CHECK(!verify_cover(p4, {0, 3}));  // leaves {1,2} uncovered
  CHECK(!verify_cover(p4, {2}));
  CHECK(!verify_cover(p4, {}));
}

TEST_CASE("koenig duality against two independent brute forces") {
  for (int i = 0; i < 120; ++i) {
    std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
    int whites = 1 + i % 6;
    int blacks = 1 + (i / 6) % 6;
    double p = 0.15 + 0.2 * (i % 4);
    BipartiteSample s = random_bipartite(whites, blacks, p, seed);
    Matching m = hopcroft_karp(s.graph, s.colouring);
    VertexCover cover = koenig_cover(s.graph, s.colouring, m);
    CAPTURE(i);
    CHECK(verify_cover(s.graph, cover));
    CHECK(m.size == brute_max_matching(s.graph));
    CHECK(static_cast<std::int64_t>(cover.size()) == brute_min_vc_mask(s.graph));
    CHECK(static_cast<std::int64_t>(cover.size()) == brute_min_vertex_cover(s.graph));
    CHECK(static_cast<std::int64_t>(cover.size()) == m.size);
  }
}

TEST_CASE("brute forces agree with each other on closed forms") {
  Graph p5 = Graph::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK(brute_max_matching(p5) == 2);
  CHECK(brute_min_vc_mask(p5) == 2);
  CHECK(brute_min_vertex_cover(p5) == 2);
  Graph empty = Graph::from_edges(4, {});
  CHECK(brute_max_matching(empty) == 0);
  CHECK(brute_min_vc_mask(empty) == 0);
  CHECK(brute_min_vertex_cover(empty) == 0);
  // the mask scan is capped; the branching solver handles larger graphs
  std::vector<std::pair<int, int>> big;
  for (int i = 0; i + 1 < 40; ++i) big.emplace_back(i, i + 1);
  Graph p40 = Graph::from_edges(40, big);
  CHECK_THROWS_AS(brute_min_vc_mask(p40), InputError);
  CHECK(brute_min_vertex_cover(p40) == 20);  // path on 2k vertices needs k
}

TEST_CASE("brute chromatic on closed forms") {
  Graph tri = Graph::from_edges(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(brute_chromatic(tri) == 3);
  std::vector<std::pair<int, int>> c5;
  for (int i = 0; i < 5; ++i) c5.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
  CHECK(brute_chromatic(Graph::from_edges(5, c5)) == 3);
  CHECK(brute_chromatic(Graph::from_edges(3, {})) == 1);
  CHECK(brute_chromatic(Graph::from_edges(2, {{0, 1}})) == 2);
}
