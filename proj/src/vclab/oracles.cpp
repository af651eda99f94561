#include "vclab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>

#include "vclab/matching.hpp"
#include "vclab/rng.hpp"

namespace vclab {

std::int64_t brute_max_matching(const Graph& g) {
  int n = g.size();
  if (n > 22) throw InputError("brute_max_matching: too many vertices");
  std::vector<signed char> memo(std::size_t{1} << n, -1);
  std::function<int(unsigned)> rec = [&](unsigned used) -> int {
    int v = 0;
    while (v < n && (used >> v & 1u)) ++v;
    if (v == n) return 0;
    if (memo[used] >= 0) return memo[used];
    int best = rec(used | 1u << v);  // v stays unmatched
    for (int u : g.neighbours(v))
      if (!(used >> u & 1u)) best = std::max(best, 1 + rec(used | 1u << v | 1u << u));
    memo[used] = static_cast<signed char>(best);
    return best;
  };
  return rec(0);
}

std::int64_t brute_min_vc_mask(const Graph& g, int cutoff) {
  int n = g.size();
  if (cutoff > 24) throw InputError("brute_min_vc_mask: cutoff too large");
  if (n > cutoff) throw InputError("brute_min_vc_mask: too many vertices");
  auto edges = g.edges();
  int best = n;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    int size = std::popcount(mask);
    if (size >= best) continue;
    bool ok = true;
    for (auto [u, v] : edges)
      if (!(mask >> u & 1u) && !(mask >> v & 1u)) {
        ok = false;
        break;
      }
    if (ok) best = size;
  }
  return best;
}

namespace {

// greedy matching over the edges not yet covered; a lower bound on the
// remaining cover size
int matching_lower_bound(const std::vector<std::pair<int, int>>& edges, const std::vector<bool>& in_cover,
                         std::vector<bool>& touched) {
  std::fill(touched.begin(), touched.end(), false);
  int lb = 0;
  for (auto [u, v] : edges) {
    if (in_cover[static_cast<std::size_t>(u)] || in_cover[static_cast<std::size_t>(v)]) continue;
    if (touched[static_cast<std::size_t>(u)] || touched[static_cast<std::size_t>(v)]) continue;
    touched[static_cast<std::size_t>(u)] = touched[static_cast<std::size_t>(v)] = true;
    ++lb;
  }
  return lb;
}

}  // namespace

std::int64_t brute_min_vertex_cover(const Graph& g, int cutoff) {
  int n = g.size();
  if (n > cutoff) throw InputError("brute_min_vertex_cover: too many vertices");
  auto edges = g.edges();
  std::vector<bool> in_cover(static_cast<std::size_t>(n), false);
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  // incumbent: both endpoints of a maximal matching form a valid cover
  int best = 2 * matching_lower_bound(edges, in_cover, touched);
  std::function<void(int)> rec = [&](int k) {
    int eu = -1;
    int ev = -1;
    for (auto [u, v] : edges)
      if (!in_cover[static_cast<std::size_t>(u)] && !in_cover[static_cast<std::size_t>(v)]) {
        eu = u;
        ev = v;
        break;
      }
    if (eu < 0) {
      best = std::min(best, k);
      return;
    }
    if (k + matching_lower_bound(edges, in_cover, touched) >= best) return;
    for (int pick : {eu, ev}) {
      in_cover[static_cast<std::size_t>(pick)] = true;
      rec(k + 1);
      in_cover[static_cast<std::size_t>(pick)] = false;
    }
  };
  rec(0);
  return best;
}

int brute_chromatic(const Graph& g) {
  int n = g.size();
  if (n > 12) throw InputError("brute_chromatic: too many vertices");
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> fill = [&](int v, int k) -> bool {
    if (v == n) return true;
    for (int c = 0; c < k; ++c) {
      bool ok = true;
      for (int u : g.neighbours(v)) ok = ok && colour[static_cast<std::size_t>(u)] != c;
      if (!ok) continue;
      colour[static_cast<std::size_t>(v)] = c;
      if (fill(v + 1, k)) return true;
      colour[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  for (int k = 1; k <= n; ++k)
    if (fill(0, k)) return k;
  return n;
}

double binom_upper_tail(std::int64_t n, double p, std::int64_t k) {
  if (n < 1 || p < 0.0 || p > 1.0) throw InputError("binom_upper_tail: bad parameters");
  if (k <= 0) return 1.0;
  if (k > n) return 0.0;
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  double sum = 0.0;
  for (std::int64_t j = k; j <= n; ++j) {
    double lg = std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(j) + 1) -
                std::lgamma(static_cast<double>(n - j) + 1) + static_cast<double>(j) * std::log(p) +
                static_cast<double>(n - j) * std::log1p(-p);
    sum += std::exp(lg);
  }
  return std::min(1.0, sum);
}

BipartiteSample random_bipartite(int whites, int blacks, double edge_prob, std::uint64_t seed) {
  if (whites < 0 || blacks < 0 || whites + blacks < 1) throw InputError("random_bipartite: bad part sizes");
  if (edge_prob < 0.0 || edge_prob > 1.0) throw InputError("random_bipartite: bad edge probability");
  Rng rng(derive_seed(seed, 0xb1aaULL));
  std::vector<std::pair<int, int>> edges;
  for (int w = 0; w < whites; ++w)
    for (int b = 0; b < blacks; ++b)
      if (rng.bernoulli(edge_prob)) edges.emplace_back(w, whites + b);
  BipartiteSample s{Graph::from_edges(whites + blacks, edges), {}};
  s.colouring.assign(static_cast<std::size_t>(whites + blacks), Colour::black);
  for (int w = 0; w < whites; ++w) s.colouring[static_cast<std::size_t>(w)] = Colour::white;
  return s;
}

Delta3Check verify_delta3_reconstruction(const BalancedDigraph& d) {
  int n = d.size();
  if (n > 10) throw InputError("verify_delta3_reconstruction: source too large");
  Labelling all_red(static_cast<std::size_t>(n), Label::red);
  GadgetInstance inst = build_pi(d, all_red, GadgetFamily::delta3);

  Delta3Check chk;
  chk.expected = 2 * static_cast<std::int64_t>(n);
  chk.opt_brute = brute_min_vertex_cover(inst.pi, 48);
  chk.opt_ok = chk.opt_brute == chk.expected;

  chk.min_class_size = 5;
  std::vector<int> valid_masks;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<int> cover;
    for (int v = 0; v < n; ++v)
      for (int i = 0; i < 4; ++i)
        if (mask >> i & 1) cover.push_back(4 * v + i);
    if (!verify_cover(inst.pi, cover)) continue;
    int size = std::popcount(static_cast<unsigned>(mask));
    if (size < chk.min_class_size) {
      chk.min_class_size = size;
      chk.min_classes.clear();
    }
    if (size == chk.min_class_size) chk.min_classes.push_back(mask);
  }
  chk.classes_ok = chk.min_class_size == 2 && !chk.min_classes.empty();
  for (int mask : chk.min_classes) {
    bool omits_middle = !(mask >> 1 & 1) || !(mask >> 2 & 1);  // b1 or w2 missing
    chk.classes_ok = chk.classes_ok && omits_middle;
  }
  return chk;
}

}  // namespace vclab
