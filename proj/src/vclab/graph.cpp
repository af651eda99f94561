#include "vclab/graph.hpp"

#include <algorithm>
#include <deque>
#include <queue>

namespace vclab {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InputError("graph: negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("graph: edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    if (u == v) throw InputError("graph: self-loop at vertex " + std::to_string(u));
    g.adj_[static_cast<std::size_t>(u)].push_back(v);
    g.adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& a = g.adj_[static_cast<std::size_t>(v)];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end())
      throw InputError("graph: duplicate edge at vertex " + std::to_string(v));
  }
  g.m_ = static_cast<std::int64_t>(edges.size());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> es;
  es.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[static_cast<std::size_t>(u)])
      if (u < v) es.emplace_back(u, v);
  return es;
}

BalancedDigraph BalancedDigraph::from_arcs(int n, const std::vector<std::pair<int, int>>& arcs) {
  std::vector<std::pair<int, int>> und;
  und.reserve(arcs.size());
  for (auto [u, v] : arcs) und.emplace_back(std::min(u, v), std::max(u, v));
  BalancedDigraph d;
  d.underlying_ = Graph::from_edges(n, und);  // rejects loops, duplicate and anti-parallel arcs
  d.out_.assign(static_cast<std::size_t>(n), {});
  d.in_.assign(static_cast<std::size_t>(n), {});
  for (auto [u, v] : arcs) {
    d.out_[static_cast<std::size_t>(u)].push_back(v);
    d.in_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(d.out_[static_cast<std::size_t>(v)].begin(), d.out_[static_cast<std::size_t>(v)].end());
    std::sort(d.in_[static_cast<std::size_t>(v)].begin(), d.in_[static_cast<std::size_t>(v)].end());
    if (d.out_[static_cast<std::size_t>(v)].size() != d.in_[static_cast<std::size_t>(v)].size())
      throw InputError("digraph: vertex " + std::to_string(v) + " has in-degree != out-degree");
  }
  return d;
}

std::vector<std::pair<int, int>> BalancedDigraph::arcs() const {
  std::vector<std::pair<int, int>> as;
  as.reserve(static_cast<std::size_t>(arc_count()));
  for (int u = 0; u < size(); ++u)
    for (int v : out_[static_cast<std::size_t>(u)]) as.emplace_back(u, v);
  return as;
}

std::vector<int> bfs_distances(const Graph& g, int v, int max_depth) {
  std::vector<int> dist(static_cast<std::size_t>(g.size()), -1);
  std::deque<int> q;
  dist[static_cast<std::size_t>(v)] = 0;
  q.push_back(v);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    int du = dist[static_cast<std::size_t>(u)];
    if (max_depth >= 0 && du >= max_depth) continue;
    for (int w : g.neighbours(u)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = du + 1;
        q.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> ball(const Graph& g, int v, int r) {
  if (v < 0 || v >= g.size()) throw InputError("ball: vertex out of range");
  if (r < 0) throw InputError("ball: negative radius");
  auto dist = bfs_distances(g, v, r);
  std::vector<int> out;
  for (int u = 0; u < g.size(); ++u)
    if (dist[static_cast<std::size_t>(u)] >= 0) out.push_back(u);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
    throw InputError("induced_subgraph: duplicate vertex");
  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] < 0 || vs[i] >= g.size()) throw InputError("induced_subgraph: vertex out of range");
    local[static_cast<std::size_t>(vs[i])] = static_cast<int>(i);
  }
  std::vector<std::pair<int, int>> es;
  for (int u : vs)
    for (int w : g.neighbours(u))
      if (u < w && local[static_cast<std::size_t>(w)] >= 0)
        es.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(w)]);
  InducedSubgraph s;
  s.graph = Graph::from_edges(static_cast<int>(vs.size()), es);
  s.vertex_of = std::move(vs);
  return s;
}

std::optional<int> girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge found at depths d(u), d(w) closes a
  // cycle of length d(u)+d(w)+1 through the root. The minimum over all roots
  // and all such edges is exact for unweighted graphs.
  int best = -1;
  std::vector<int> dist(static_cast<std::size_t>(g.size()));
  std::vector<int> parent(static_cast<std::size_t>(g.size()));
  for (int s = 0; s < g.size(); ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> q;
    dist[static_cast<std::size_t>(s)] = 0;
    q.push_back(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (best > 0 && 2 * dist[static_cast<std::size_t>(u)] >= best) break;
      for (int w : g.neighbours(u)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(w)] = u;
          q.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(u)]) {
          int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
    if (best == 3) return 3;
  }
  if (best < 0) return std::nullopt;
  return best;
}

Graph power_graph(const Graph& g, int k) {
  if (k < 0) throw InputError("power_graph: negative exponent");
  std::vector<std::pair<int, int>> es;
  for (int v = 0; v < g.size(); ++v) {
    auto dist = bfs_distances(g, v, k);
    for (int u = v + 1; u < g.size(); ++u)
      if (dist[static_cast<std::size_t>(u)] > 0) es.emplace_back(v, u);
  }
  return Graph::from_edges(g.size(), es);
}

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(static_cast<std::size_t>(g.size()), -1);
  int c = 0;
  for (int s = 0; s < g.size(); ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::deque<int> q{s};
    comp[static_cast<std::size_t>(s)] = c;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int w : g.neighbours(u))
        if (comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = c;
          q.push_back(w);
        }
    }
    ++c;
  }
  return comp;
}

bool is_connected(const Graph& g) {
  if (g.size() == 0) return true;
  auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

EdgeFraction boundary_fraction(const Graph& g, const Labelling& l) {
  if (static_cast<int>(l.size()) != g.size()) throw InputError("boundary_fraction: labelling size mismatch");
  EdgeFraction f;
  f.total = g.edge_count();
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbours(u))
      if (u < v && l[static_cast<std::size_t>(u)] != l[static_cast<std::size_t>(v)]) ++f.crossing;
  return f;
}

BalancedDigraph euler_orient(const Graph& g) {
  for (int v = 0; v < g.size(); ++v)
    if (g.degree(v) % 2 != 0)
      throw InputError("euler_orient: odd degree at vertex " + std::to_string(v));
  // Hierholzer per component, following each edge once.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.size()));  // (neighbour, edge id)
  int eid = 0;
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbours(u))
      if (u < v) {
        adj[static_cast<std::size_t>(u)].emplace_back(v, eid);
        adj[static_cast<std::size_t>(v)].emplace_back(u, eid);
        ++eid;
      }
  std::vector<bool> used(static_cast<std::size_t>(eid), false);
  std::vector<std::size_t> next(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::pair<int, int>> arcs;
  arcs.reserve(static_cast<std::size_t>(eid));
  for (int s = 0; s < g.size(); ++s) {
    if (next[static_cast<std::size_t>(s)] >= adj[static_cast<std::size_t>(s)].size()) continue;
    std::vector<int> stack{s};
    std::vector<int> tour;
    while (!stack.empty()) {
      int u = stack.back();
      auto& cur = next[static_cast<std::size_t>(u)];
      while (cur < adj[static_cast<std::size_t>(u)].size() && used[static_cast<std::size_t>(adj[static_cast<std::size_t>(u)][cur].second)]) ++cur;
      if (cur == adj[static_cast<std::size_t>(u)].size()) {
        tour.push_back(u);
        stack.pop_back();
      } else {
        auto [w, id] = adj[static_cast<std::size_t>(u)][cur];
        used[static_cast<std::size_t>(id)] = true;
        stack.push_back(w);
      }
    }
    for (std::size_t i = 0; i + 1 < tour.size(); ++i) arcs.emplace_back(tour[i], tour[i + 1]);
  }
  if (static_cast<int>(arcs.size()) != eid) throw InternalError("euler_orient: tour did not cover all edges");
  return BalancedDigraph::from_arcs(g.size(), arcs);
}

bool proper_bicolouring(const Graph& g, const Colouring& c) {
  if (static_cast<int>(c.size()) != g.size()) return false;
  for (int u = 0; u < g.size(); ++u)
    for (int v : g.neighbours(u))
      if (c[static_cast<std::size_t>(u)] == c[static_cast<std::size_t>(v)]) return false;
  return true;
}

std::string to_string(Label l) { return l == Label::red ? "red" : "blue"; }
std::string to_string(Colour c) { return c == Colour::white ? "white" : "black"; }

Label parse_label(const std::string& s) {
  if (s == "red") return Label::red;
  if (s == "blue") return Label::blue;
  throw InputError("unknown label: " + s);
}

Colour parse_colour(const std::string& s) {
  if (s == "white") return Colour::white;
  if (s == "black") return Colour::black;
  throw InputError("unknown colour: " + s);
}

}  // namespace vclab
