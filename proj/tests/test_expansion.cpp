#include <cmath>

#include "doctest.h"
#include "vclab/expansion.hpp"
#include "vclab/random_regular.hpp"

using namespace vclab;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i) es.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph::from_edges(n, es);
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph petersen() {
  return Graph::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7},
                                {3, 8}, {4, 9}, {5, 7}, {7, 9}, {6, 9}, {6, 8}, {5, 8}});
}

}  // namespace

TEST_CASE("exhaustive expansion on closed forms") {
  // K4: every cut of k vertices crosses k*(4-k) edges, minimized ratio 2 at k = 2
  CHECK(edge_expansion_exhaustive(complete(4)).delta_hat == doctest::Approx(2.0));
  // C6: a contiguous arc of 3 vertices gives 2/3
  CHECK(edge_expansion_exhaustive(cycle(6)).delta_hat == doctest::Approx(2.0 / 3.0));
  // Petersen: h = 1 (cut one pentagon off)
  CHECK(edge_expansion_exhaustive(petersen()).delta_hat == doctest::Approx(1.0));
  CHECK_THROWS_AS(edge_expansion_exhaustive(random_4regular(24, 1)), InputError);
}

TEST_CASE("spectral certificates match known spectra") {
  // K4: lambda2 = -1, delta_hat ~= (3 + 1)/2 = 2
  ExpansionCertificate k4 = spectral_expansion(complete(4));
  REQUIRE(k4.lambda2.has_value());
  CHECK(*k4.lambda2 == doctest::Approx(-1.0).epsilon(1e-4));
  CHECK(k4.delta_hat == doctest::Approx(2.0).epsilon(1e-4));
  CHECK(k4.degree == 3);

  // C6: lambda2 = 2*cos(pi/3) = 1, delta_hat ~= 0.5; the most negative
  // eigenvalue is -2, so this exercises the shifted iteration
  ExpansionCertificate c6 = spectral_expansion(cycle(6));
  REQUIRE(c6.lambda2.has_value());
  CHECK(*c6.lambda2 == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(c6.delta_hat == doctest::Approx(0.5).epsilon(1e-4));

  // Petersen: lambda2 = 1, delta_hat ~= 1 = h exactly
  ExpansionCertificate pet = spectral_expansion(petersen());
  CHECK(*pet.lambda2 == doctest::Approx(1.0).epsilon(1e-4));
  CHECK(pet.delta_hat == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("spectral bound never exceeds the exhaustive optimum") {
  std::vector<Graph> corpus;
  for (int n = 6; n <= 12; ++n) corpus.push_back(cycle(n));
  corpus.push_back(complete(4));
  corpus.push_back(complete(5));
  corpus.push_back(petersen());
  for (int n : {12, 16, 20}) corpus.push_back(random_4regular(n, 7 + static_cast<std::uint64_t>(n)));
  for (const Graph& g : corpus) {
    ExpansionCertificate sp = spectral_expansion(g);
    ExpansionCertificate ex = edge_expansion_exhaustive(g);
    CAPTURE(g.size());
    CHECK(sp.delta_hat <= ex.delta_hat);
    CHECK(sp.delta_hat > 0.0);
  }
}

TEST_CASE("spectral expansion rejects irregular or disconnected graphs") {
  CHECK_THROWS_AS(spectral_expansion(Graph::from_edges(3, {{0, 1}, {1, 2}})), InputError);
  Graph two = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(spectral_expansion(two), InputError);
}

TEST_CASE("random 4-regular generator output") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    Graph g = random_4regular(30, seed);
    CHECK(g.size() == 30);
    for (int v = 0; v < 30; ++v) CHECK(g.degree(v) == 4);
    CHECK(is_connected(g));
  }
  CHECK(random_4regular(30, 5) == random_4regular(30, 5));
  CHECK(!(random_4regular(30, 5) == random_4regular(30, 6)));
  CHECK_THROWS_AS(random_4regular(4, 1), InputError);
}
