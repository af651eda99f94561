#include "vclab/matching.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>

namespace vclab {

std::vector<std::pair<int, int>> Matching::edges() const {
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < static_cast<int>(partner.size()); ++v) {
    int u = partner[static_cast<std::size_t>(v)];
    if (u > v) es.emplace_back(v, u);
  }
  return es;
}

Matching hopcroft_karp(const Graph& g, const Colouring& c) {
  if (!proper_bicolouring(g, c)) throw InputError("hopcroft_karp: colouring is not a proper bipartition");
  int n = g.size();
  constexpr int inf = std::numeric_limits<int>::max();
  std::vector<int> match(static_cast<std::size_t>(n), -1);
  std::vector<int> level(static_cast<std::size_t>(n));
  std::vector<int> whites;
  for (int v = 0; v < n; ++v)
    if (c[static_cast<std::size_t>(v)] == Colour::white) whites.push_back(v);

  auto bfs = [&]() {
    std::deque<int> q;
    bool found = false;
    std::fill(level.begin(), level.end(), inf);
    for (int w : whites)
      if (match[static_cast<std::size_t>(w)] < 0) {
        level[static_cast<std::size_t>(w)] = 0;
        q.push_back(w);
      }
    while (!q.empty()) {
      int w = q.front();
      q.pop_front();
      for (int b : g.neighbours(w)) {
        int next = match[static_cast<std::size_t>(b)];
        if (next < 0) {
          found = true;
        } else if (level[static_cast<std::size_t>(next)] == inf) {
          level[static_cast<std::size_t>(next)] = level[static_cast<std::size_t>(w)] + 1;
          q.push_back(next);
        }
      }
    }
    return found;
  };

  std::function<bool(int)> dfs = [&](int w) {
    for (int b : g.neighbours(w)) {
      int next = match[static_cast<std::size_t>(b)];
      if (next < 0 || (level[static_cast<std::size_t>(next)] == level[static_cast<std::size_t>(w)] + 1 && dfs(next))) {
        match[static_cast<std::size_t>(w)] = b;
        match[static_cast<std::size_t>(b)] = w;
        return true;
      }
    }
    level[static_cast<std::size_t>(w)] = inf;
    return false;
  };

  Matching m;
  while (bfs())
    for (int w : whites)
      if (match[static_cast<std::size_t>(w)] < 0 && dfs(w)) ++m.size;
  m.partner = std::move(match);
  return m;
}

VertexCover koenig_cover(const Graph& g, const Colouring& c, const Matching& m) {
  if (!proper_bicolouring(g, c)) throw InputError("koenig_cover: colouring is not a proper bipartition");
  int n = g.size();
  if (static_cast<int>(m.partner.size()) != n) throw InputError("koenig_cover: matching size mismatch");
  // Z = vertices reachable from unmatched whites alternating
  // (white -> black via non-matching edges, black -> white via matching edges)
  std::vector<bool> in_z(static_cast<std::size_t>(n), false);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (c[static_cast<std::size_t>(v)] == Colour::white && m.partner[static_cast<std::size_t>(v)] < 0) {
      in_z[static_cast<std::size_t>(v)] = true;
      q.push_back(v);
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (c[static_cast<std::size_t>(v)] == Colour::white) {
      for (int b : g.neighbours(v))
        if (m.partner[static_cast<std::size_t>(v)] != b && !in_z[static_cast<std::size_t>(b)]) {
          in_z[static_cast<std::size_t>(b)] = true;
          q.push_back(b);
        }
    } else {
      int w = m.partner[static_cast<std::size_t>(v)];
      if (w >= 0 && !in_z[static_cast<std::size_t>(w)]) {
        in_z[static_cast<std::size_t>(w)] = true;
        q.push_back(w);
      }
    }
  }
  VertexCover cover;
  for (int v = 0; v < n; ++v) {
    bool white = c[static_cast<std::size_t>(v)] == Colour::white;
    if ((white && !in_z[static_cast<std::size_t>(v)]) || (!white && in_z[static_cast<std::size_t>(v)]))
      cover.push_back(v);
  }
  if (static_cast<std::int64_t>(cover.size()) != m.size)
    throw InternalError("koenig_cover: |cover| != |matching|");
  if (!verify_cover(g, cover)) throw InternalError("koenig_cover: produced set is not a cover");
  return cover;
}

VertexCover opt_2vc(const Graph& g, const Colouring& c) { return koenig_cover(g, c, hopcroft_karp(g, c)); }

bool verify_cover(const Graph& g, const std::vector<int>& cover) {
  std::vector<bool> in_cover(static_cast<std::size_t>(g.size()), false);
  for (int v : cover) {
    if (v < 0 || v >= g.size()) return false;
    in_cover[static_cast<std::size_t>(v)] = true;
  }
  for (int u = 0; u < g.size(); ++u) {
    if (in_cover[static_cast<std::size_t>(u)]) continue;
    for (int v : g.neighbours(u))
      if (u < v && !in_cover[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

}  // namespace vclab
