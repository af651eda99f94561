#include "vclab/random_regular.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "vclab/rng.hpp"

namespace vclab {

Graph random_4regular(int n, std::uint64_t seed) {
  if (n < 6) throw InputError("random_4regular: need n >= 6");
  Rng rng(derive_seed(seed, 0x4627e6ULL));
  const int budget = 1000;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int attempt = 0; attempt < budget; ++attempt) {
    std::set<std::pair<int, int>> edges;
    bool ok = true;
    for (int cycle = 0; cycle < 2 && ok; ++cycle) {
      std::iota(perm.begin(), perm.end(), 0);
      rng.shuffle(perm);
      for (int i = 0; i < n && ok; ++i) {
        int u = perm[static_cast<std::size_t>(i)];
        int v = perm[static_cast<std::size_t>((i + 1) % n)];
        ok = edges.emplace(std::min(u, v), std::max(u, v)).second;
      }
    }
    if (!ok) continue;
    return Graph::from_edges(n, {edges.begin(), edges.end()});
  }
  throw InternalError("random_4regular: no simple graph in " + std::to_string(budget) + " attempts");
}

}  // namespace vclab
