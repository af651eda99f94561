#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vclab {

// Thrown on malformed files, malformed configs and violated preconditions of
// user-supplied data. The CLI maps it to exit code 2.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a requested analysis does not apply to the given instance
// (e.g. a fooling sweep whose endpoints do not straddle n/2). Exit code 3.
struct InapplicableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Internal consistency violation (a bug). Exit code 4.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

enum class Label : std::uint8_t { red = 0, blue = 1 };
enum class Colour : std::uint8_t { white = 0, black = 1 };

using Labelling = std::vector<Label>;
using Colouring = std::vector<Colour>;

inline Label flip(Label l) { return l == Label::red ? Label::blue : Label::red; }

// Simple undirected graph, immutable after construction.
// Adjacency lists are sorted; no self-loops, no parallel edges.
class Graph {
 public:
  Graph() = default;

  // Validates and normalizes. Throws InputError on loops, duplicates or
  // out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  int size() const { return n_; }
  std::int64_t edge_count() const { return m_; }
  std::span<const int> neighbours(int v) const {
    return {adj_[static_cast<std::size_t>(v)].data(), adj_[static_cast<std::size_t>(v)].size()};
  }
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool has_edge(int u, int v) const;

  // Edges as sorted (u, v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Directed graph with in-degree == out-degree at every vertex and a simple
// underlying graph (no self-arcs, duplicate arcs or anti-parallel pairs, so
// forgetting directions is a bijection onto the underlying edge set).
class BalancedDigraph {
 public:
  BalancedDigraph() = default;

  static BalancedDigraph from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  int size() const { return underlying_.size(); }
  std::int64_t arc_count() const { return underlying_.edge_count(); }
  std::span<const int> out_neighbours(int v) const {
    return {out_[static_cast<std::size_t>(v)].data(), out_[static_cast<std::size_t>(v)].size()};
  }
  std::span<const int> in_neighbours(int v) const {
    return {in_[static_cast<std::size_t>(v)].data(), in_[static_cast<std::size_t>(v)].size()};
  }
  const Graph& underlying() const { return underlying_; }

  // Arcs as (tail, head), sorted lexicographically.
  std::vector<std::pair<int, int>> arcs() const;

 private:
  Graph underlying_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// BFS distances from v; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int v, int max_depth = -1);

// Vertices at distance <= r from v, sorted ascending.
std::vector<int> ball(const Graph& g, int v, int r);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_of;  // local index -> original vertex (sorted)
};

// Subgraph induced on `vertices` (need not be sorted; duplicates rejected).
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

// G^k: edge {u,v} iff 1 <= dist_G(u,v) <= k. k = 0 gives the empty graph.
Graph power_graph(const Graph& g, int k);

bool is_connected(const Graph& g);
std::vector<int> component_ids(const Graph& g);  // per-vertex component index

// Exact cut fraction: crossing edge count over total edge count.
struct EdgeFraction {
  std::int64_t crossing = 0;
  std::int64_t total = 0;
  double value() const { return total == 0 ? 0.0 : static_cast<double>(crossing) / static_cast<double>(total); }
};

EdgeFraction boundary_fraction(const Graph& g, const Labelling& l);

// Euler orientation: orients every edge along an Euler tour of its component.
// Requires all degrees even; the result has in = out = deg/2 everywhere.
BalancedDigraph euler_orient(const Graph& g);

bool proper_bicolouring(const Graph& g, const Colouring& c);

std::string to_string(Label l);
std::string to_string(Colour c);
Label parse_label(const std::string& s);
Colour parse_colour(const std::string& s);

}  // namespace vclab
