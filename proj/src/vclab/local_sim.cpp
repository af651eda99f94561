#include "vclab/local_sim.hpp"

#include <algorithm>
#include <numeric>

namespace vclab {

std::vector<std::uint64_t> assign_random_ids(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("assign_random_ids: need n >= 1");
  Rng rng(derive_seed(seed, 0x1d5ULL));
  std::uint64_t cube = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
  std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
  for (auto& id : ids) id = 1 + rng.below(cube);
  return ids;
}

namespace {

// ids/tapes for a whole instance are a pure function of (seed, inputs).
std::vector<std::uint64_t> instance_ids(int n, Mode mode, std::uint64_t seed) {
  if (mode == Mode::anonymous) return {};
  if (mode == Mode::unique_ids) {
    std::vector<std::uint64_t> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
  }
  return assign_random_ids(n, seed);
}

std::uint64_t tape_key(const SimInputs& in, int v) {
  return in.tape_keys.empty() ? static_cast<std::uint64_t>(v) : in.tape_keys[static_cast<std::size_t>(v)];
}

}  // namespace

LocalView make_view(const Graph& g, const SimInputs& in, int v, int r, Mode mode, std::uint64_t seed,
                    std::uint64_t salt) {
  if (!in.labels.empty() && static_cast<int>(in.labels.size()) != g.size())
    throw InputError("make_view: labels size mismatch");
  if (!in.colours.empty() && static_cast<int>(in.colours.size()) != g.size())
    throw InputError("make_view: colours size mismatch");

  auto dist = bfs_distances(g, v, r);
  std::vector<int> members;
  for (int u = 0; u < g.size(); ++u)
    if (dist[static_cast<std::size_t>(u)] >= 0) members.push_back(u);

  // local index 0 = root; in anonymous mode the rest are permuted per call
  std::vector<int> order = members;
  order.erase(std::find(order.begin(), order.end(), v));
  if (mode == Mode::anonymous) {
    Rng rng(derive_seed(seed, 0xa70ULL ^ static_cast<std::uint64_t>(v), salt));
    rng.shuffle(order);
  }
  order.insert(order.begin(), v);

  std::vector<int> local(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) local[static_cast<std::size_t>(order[i])] = static_cast<int>(i);

  std::vector<std::pair<int, int>> es;
  for (int u : order)
    for (int w : g.neighbours(u))
      if (local[static_cast<std::size_t>(w)] >= 0 && u < w)
        es.emplace_back(local[static_cast<std::size_t>(u)], local[static_cast<std::size_t>(w)]);

  LocalView view;
  view.graph = Graph::from_edges(static_cast<int>(order.size()), es);
  view.radius = r;
  view.dist.resize(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    view.dist[i] = dist[static_cast<std::size_t>(order[i])];
  if (!in.labels.empty()) {
    view.labels.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) view.labels[i] = in.labels[static_cast<std::size_t>(order[i])];
  }
  if (!in.colours.empty()) {
    view.colours.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) view.colours[i] = in.colours[static_cast<std::size_t>(order[i])];
  }
  if (mode != Mode::anonymous) {
    auto ids = in.ids.empty() ? instance_ids(g.size(), mode, seed) : in.ids;
    if (static_cast<int>(ids.size()) != g.size()) throw InputError("make_view: ids size mismatch");
    view.ids.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) view.ids[i] = ids[static_cast<std::size_t>(order[i])];
  }
  if (mode == Mode::randomized_ids) {
    view.tapes.resize(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
      view.tapes[i] = make_tape(seed, tape_key(in, order[i]));
  }
  return view;
}

int run_at(const Graph& g, const SimInputs& in, const LocalAlgorithm& algo, int v, std::uint64_t seed,
           std::uint64_t salt) {
  LocalView view = make_view(g, in, v, algo.radius, algo.mode, seed, salt);
  try {
    return algo.eval(view);
  } catch (const std::exception& e) {
    throw InternalError("algorithm '" + algo.name + "' failed at vertex " + std::to_string(v) + ": " + e.what());
  }
}

SimulationRun run_local(const Graph& g, const SimInputs& in, const LocalAlgorithm& algo, std::uint64_t seed,
                        std::uint64_t salt) {
  SimulationRun run;
  run.outputs.resize(static_cast<std::size_t>(g.size()));
  for (int v = 0; v < g.size(); ++v) {
    int o = run_at(g, in, algo, v, seed, salt);
    run.outputs[static_cast<std::size_t>(v)] = o;
    if (o != 0) {
      ++run.ones;
      if (!in.colours.empty())
        (in.colours[static_cast<std::size_t>(v)] == Colour::white ? run.whites : run.blacks) += 1;
    }
  }
  return run;
}

bool check_locality(const Graph& g, SimInputs& in, const LocalAlgorithm& algo, int v, int trials,
                    std::uint64_t seed) {
  int baseline = run_at(g, in, algo, v, seed, 0);
  auto inside = ball(g, v, algo.radius);
  std::vector<bool> in_ball(static_cast<std::size_t>(g.size()), false);
  for (int u : inside) in_ball[static_cast<std::size_t>(u)] = true;
  std::vector<int> outside;
  for (int u = 0; u < g.size(); ++u)
    if (!in_ball[static_cast<std::size_t>(u)]) outside.push_back(u);

  const SimInputs saved = in;
  bool ok = true;
  Rng rng(derive_seed(seed, 0x10caULL, static_cast<std::uint64_t>(v)));
  std::uint64_t cube = static_cast<std::uint64_t>(g.size());
  cube = cube * cube * cube;
  for (int t = 0; t < trials && ok; ++t) {
    if (algo.mode != Mode::anonymous && in.ids.empty()) in.ids = instance_ids(g.size(), algo.mode, seed);
    if (algo.mode == Mode::randomized_ids && in.tape_keys.empty()) {
      in.tape_keys.resize(static_cast<std::size_t>(g.size()));
      std::iota(in.tape_keys.begin(), in.tape_keys.end(), 0);
    }
    for (int u : outside) {
      auto uu = static_cast<std::size_t>(u);
      if (!in.labels.empty() && rng.bernoulli(0.5)) in.labels[uu] = flip(in.labels[uu]);
      if (!in.colours.empty() && rng.bernoulli(0.5))
        in.colours[uu] = in.colours[uu] == Colour::white ? Colour::black : Colour::white;
      if (algo.mode == Mode::randomized_ids) {
        in.ids[uu] = 1 + rng.below(cube);
        in.tape_keys[uu] = rng.next_u64() | (1ULL << 63);  // fresh tape for u
      } else if (algo.mode == Mode::unique_ids) {
        // keep ids unique: move u into a disjoint range
        in.ids[uu] = static_cast<std::uint64_t>(g.size()) + rng.below(cube);
      }
    }
    ok = run_at(g, in, algo, v, seed, 0) == baseline;
    in = saved;
  }
  in = saved;
  return ok;
}

bool check_anonymity(const Graph& g, const SimInputs& in, const LocalAlgorithm& algo, int trials,
                     std::uint64_t seed) {
  if (algo.mode != Mode::anonymous) throw InputError("check_anonymity: algorithm is not anonymous");
  int n = g.size();
  auto base_edges = g.edges();
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  Rng rng(derive_seed(seed, 0xa40ULL));
  for (int t = 0; t < trials; ++t) {
    rng.shuffle(f);
    std::vector<std::pair<int, int>> es;
    es.reserve(base_edges.size());
    for (auto [u, v] : base_edges) {
      int fu = f[static_cast<std::size_t>(u)], fv = f[static_cast<std::size_t>(v)];
      es.emplace_back(std::min(fu, fv), std::max(fu, fv));
    }
    Graph h = Graph::from_edges(n, es);
    SimInputs hin;
    if (!in.labels.empty()) {
      hin.labels.resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) hin.labels[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])] = in.labels[static_cast<std::size_t>(v)];
    }
    if (!in.colours.empty()) {
      hin.colours.resize(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) hin.colours[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])] = in.colours[static_cast<std::size_t>(v)];
    }
    for (int v = 0; v < n; ++v) {
      int a = run_at(g, in, algo, v, seed, static_cast<std::uint64_t>(t));
      int b = run_at(h, hin, algo, f[static_cast<std::size_t>(v)], seed + 1, static_cast<std::uint64_t>(t));
      if (a != b) return false;
    }
  }
  return true;
}

LocalAlgorithm recut_red_within_r(int r) {
  if (r < 0) throw InputError("recut_red_within_r: negative radius");
  LocalAlgorithm a;
  a.name = "recut-red-within-" + std::to_string(r);
  a.radius = r;
  a.mode = Mode::anonymous;
  a.eval = [](const LocalView& view) {
    if (!view.has_labels()) throw InputError("recut rule needs red/blue labels");
    for (Label l : view.labels)
      if (l == Label::red) return out_red;
    return out_blue;
  };
  return a;
}

LocalAlgorithm vc_all_endpoints() {
  LocalAlgorithm a;
  a.name = "vc-all-endpoints";
  a.radius = 1;
  a.mode = Mode::anonymous;
  a.eval = [](const LocalView& view) { return view.graph.degree(0) > 0 ? 1 : 0; };
  return a;
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::anonymous: return "anonymous";
    case Mode::unique_ids: return "unique-ids";
    default: return "randomized-ids";
  }
}

}  // namespace vclab
