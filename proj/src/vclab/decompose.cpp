#include "vclab/decompose.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <tuple>

#include "vclab/rng.hpp"

namespace vclab {

namespace {

int decompose_radius(int n, const DecomposeParams& p) {
  if (p.epsilon <= 0 || p.epsilon > 1) throw InputError("ls_decompose: epsilon must be in (0, 1]");
  double r = p.radius_c * std::log(std::max(2, n)) / p.epsilon;
  return static_cast<int>(std::ceil(r));
}

}  // namespace

Decomposition ls_decompose(const Graph& g, const DecomposeParams& params, std::uint64_t seed) {
  int n = g.size();
  int r = decompose_radius(n, params);
  int half = r / 2;
  double beta = params.beta_c * params.epsilon;
  if (beta <= 0) throw InputError("ls_decompose: beta must be positive");

  Rng rng(derive_seed(seed, 0xdec0ULL));
  std::vector<double> shift(static_cast<std::size_t>(n));
  for (auto& s : shift) s = rng.exponential(beta);

  // Dijkstra-style race: centre c reaches v at time dist(c,v) - shift_c; the
  // earliest arrival wins (ties to the smaller centre id). Waves only
  // propagate from vertices they own, and die beyond depth r/2.
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  using Entry = std::tuple<double, int, int, int>;  // time, centre, vertex, depth
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
  for (int v = 0; v < n; ++v) pq.emplace(-shift[static_cast<std::size_t>(v)], v, v, 0);
  while (!pq.empty()) {
    auto [time, c, v, d] = pq.top();
    pq.pop();
    if (owner[static_cast<std::size_t>(v)] >= 0) continue;
    owner[static_cast<std::size_t>(v)] = c;
    depth[static_cast<std::size_t>(v)] = d;
    if (d >= half) continue;
    for (int w : g.neighbours(v))
      if (owner[static_cast<std::size_t>(w)] < 0) pq.emplace(time + 1.0, c, w, d + 1);
  }

  Decomposition dec;
  dec.radius = r;
  dec.epsilon = params.epsilon;
  dec.block.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> cut(static_cast<std::size_t>(n), false);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbours(u))
      if (owner[static_cast<std::size_t>(u)] != owner[static_cast<std::size_t>(v)]) cut[static_cast<std::size_t>(u)] = true;
  std::vector<int> block_of_owner(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (cut[static_cast<std::size_t>(v)]) {
      dec.removed.push_back(v);
      continue;
    }
    int c = owner[static_cast<std::size_t>(v)];
    int& b = block_of_owner[static_cast<std::size_t>(c)];
    if (b < 0) {
      b = static_cast<int>(dec.blocks.size());
      dec.blocks.emplace_back();
    }
    dec.block[static_cast<std::size_t>(v)] = b;
    dec.blocks[static_cast<std::size_t>(b)].push_back(v);
  }
  return dec;
}

ApproxResult approx_2vc(const Graph& g, const Colouring& c, const DecomposeParams& params, std::uint64_t seed) {
  if (!proper_bicolouring(g, c)) throw InputError("approx_2vc: colouring is not a proper bipartition");
  ApproxResult res;
  res.decomposition = ls_decompose(g, params, seed);

  std::vector<bool> keep(static_cast<std::size_t>(g.size()), true);
  for (int v : res.decomposition.removed) keep[static_cast<std::size_t>(v)] = false;
  std::vector<int> kept;
  for (int v = 0; v < g.size(); ++v)
    if (keep[static_cast<std::size_t>(v)]) kept.push_back(v);

  auto sub = induced_subgraph(g, kept);
  auto comp = component_ids(sub.graph);
  int ncomp = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
  std::vector<std::vector<int>> members(static_cast<std::size_t>(ncomp));
  for (int lv = 0; lv < sub.graph.size(); ++lv)
    members[static_cast<std::size_t>(comp[static_cast<std::size_t>(lv)])].push_back(lv);

  std::vector<int> cover = res.decomposition.removed;
  for (auto& mem : members) {
    auto cg = induced_subgraph(sub.graph, mem);
    Colouring cc(mem.size());
    for (int i = 0; i < cg.graph.size(); ++i)
      cc[static_cast<std::size_t>(i)] =
          c[static_cast<std::size_t>(sub.vertex_of[static_cast<std::size_t>(cg.vertex_of[static_cast<std::size_t>(i)])])];
    auto local_cover = opt_2vc(cg.graph, cc);
    res.component_opt_total += static_cast<std::int64_t>(local_cover.size());
    for (int lv : local_cover)
      cover.push_back(sub.vertex_of[static_cast<std::size_t>(cg.vertex_of[static_cast<std::size_t>(lv)])]);
  }
  std::sort(cover.begin(), cover.end());
  if (!verify_cover(g, cover)) throw InternalError("approx_2vc: assembled set is not a cover");
  res.cover = std::move(cover);
  return res;
}

int max_weak_diameter(const Graph& g, const Decomposition& d) {
  int best = 0;
  for (int v = 0; v < g.size(); ++v) {
    int b = d.block[static_cast<std::size_t>(v)];
    if (b < 0) continue;
    auto dist = bfs_distances(g, v);
    for (int u : d.blocks[static_cast<std::size_t>(b)]) {
      int du = dist[static_cast<std::size_t>(u)];
      if (du < 0) throw InternalError("max_weak_diameter: block spans disconnected vertices");
      best = std::max(best, du);
    }
  }
  return best;
}

}  // namespace vclab
