#pragma once

#include <functional>
#include <optional>
#include <string>

#include "vclab/graph.hpp"
#include "vclab/rng.hpp"

namespace vclab {

// Execution modes for local algorithms.
//   anonymous:      no ids, no tapes; view indices are freshly permuted on
//                   every call so index-dependent algorithms fail fast.
//   unique_ids:     id(v) = v.
//   randomized_ids: ids drawn uniformly from {1..n^3}; per-vertex 256-bit
//                   tapes derived from (seed, tape key).
enum class Mode { anonymous, unique_ids, randomized_ids };

// Everything a vertex can see after r rounds: the subgraph induced on
// ball(v, r), re-indexed with root = 0, plus per-vertex inputs.
struct LocalView {
  Graph graph;                       // local indices
  std::vector<int> dist;             // distance from root
  std::vector<Label> labels;         // empty if absent
  std::vector<Colour> colours;       // empty if absent
  std::vector<std::uint64_t> ids;    // empty in anonymous mode
  std::vector<Tape> tapes;           // empty unless randomized mode
  int radius = 0;

  bool has_labels() const { return !labels.empty(); }
  bool has_colours() const { return !colours.empty(); }
  // True degree of a view vertex is only visible if all its edges are inside
  // the ball, i.e. at distance <= radius - 1 (the root always qualifies).
  bool degree_certified(int u) const { return dist[static_cast<std::size_t>(u)] <= radius - 1 || u == 0; }
};

// Per-vertex inputs of a simulation. Tape keys decouple tapes from vertex
// numbering so the same logical vertex keeps its tape across instances that
// renumber (defaults to the vertex index).
struct SimInputs {
  std::vector<Label> labels;    // empty if absent
  std::vector<Colour> colours;  // empty if absent
  std::vector<std::uint64_t> tape_keys;
  std::vector<std::uint64_t> ids;  // overrides mode-derived ids when non-empty

  static SimInputs from_labels(const Labelling& l) {
    SimInputs in;
    in.labels = l;
    return in;
  }
  static SimInputs from_colours(const Colouring& c) {
    SimInputs in;
    in.colours = c;
    return in;
  }
};

// An r-round algorithm: a pure function of the view. Output symbols are
// small ints; covers use {0,1}, recuts use Label values.
struct LocalAlgorithm {
  std::string name;
  int radius = 0;
  Mode mode = Mode::anonymous;
  std::function<int(const LocalView&)> eval;
};

constexpr int out_red = 0;
constexpr int out_blue = 1;

struct SimulationRun {
  std::vector<int> outputs;
  std::int64_t ones = 0;    // vertices with output != 0
  std::int64_t whites = 0;  // white vertices with output 1 (if coloured)
  std::int64_t blacks = 0;  // black vertices with output 1 (if coloured)
};

// ids for randomized mode: n iid uniform draws from {1, ..., n^3}.
std::vector<std::uint64_t> assign_random_ids(int n, std::uint64_t seed);

// View of G at v with radius r. `salt` decorrelates the anonymous index
// permutation across calls that share a seed (sweep step, trial index).
LocalView make_view(const Graph& g, const SimInputs& in, int v, int r, Mode mode, std::uint64_t seed,
                    std::uint64_t salt = 0);

// Runs algo at a single vertex / at every vertex. Wraps algorithm exceptions
// into InternalError naming the vertex.
int run_at(const Graph& g, const SimInputs& in, const LocalAlgorithm& algo, int v, std::uint64_t seed,
           std::uint64_t salt = 0);
SimulationRun run_local(const Graph& g, const SimInputs& in, const LocalAlgorithm& algo, std::uint64_t seed,
                        std::uint64_t salt = 0);

// Randomly perturbs inputs (labels, colours, ids, tapes) strictly outside
// ball(v, algo.radius) and checks the output at v is unchanged. Perturbs the
// caller's inputs in place and restores them before returning, so algorithms
// that cheat by capturing the input arrays are caught.
bool check_locality(const Graph& g, SimInputs& in, const LocalAlgorithm& algo, int v, int trials,
                    std::uint64_t seed);

// Samples random relabellings f and checks A(G, in, v) == A(f(G), f(in), f(v))
// for all vertices (anonymous algorithms only).
bool check_anonymity(const Graph& g, const SimInputs& in, const LocalAlgorithm& algo, int trials,
                     std::uint64_t seed);

// Built-in baselines.
// Outputs red iff some red vertex lies within distance r of the root.
LocalAlgorithm recut_red_within_r(int r);
// Outputs 1 iff the root has at least one neighbour (radius 1).
LocalAlgorithm vc_all_endpoints();

std::string to_string(Mode m);

}  // namespace vclab
