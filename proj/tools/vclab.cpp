// Command-line front end: wires the generators, solvers, reduction, and the
// adversary into reproducible experiments. Every command reads one JSON
// config (unknown keys rejected), writes its artifacts plus a run record and
// a Markdown summary into the output directory, and returns
//   0 success, 1 failed assertion, 2 input/parse error, 3 inapplicable
//   premise, 4 internal error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "vclab/adversary.hpp"
#include "vclab/graph_io.hpp"
#include "vclab/oracles.hpp"
#include "vclab/random_regular.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace vclab;

constexpr const char* k_version = "0.1.0";

// ---------------------------------------------------------------- config --

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open config");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

void check_keys(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || item.key() == a;
    if (!known) throw InputError(where + ": unknown key '" + item.key() + "'");
  }
}

template <typename T>
T get_req(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing key '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": key '" + std::string(key) + "' has the wrong type");
  }
}

template <typename T>
T get_opt(const json& j, const char* key, T def, const std::string& where) {
  if (!j.contains(key)) return def;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw InputError(where + ": key '" + std::string(key) + "' has the wrong type");
  }
}

// ------------------------------------------------------------- subjects --

RecutSubject subject_from_config(const json& s) {
  const std::string where = "subject";
  std::string id = get_req<std::string>(s, "id", where);
  auto family = [&] { return parse_family(get_opt<std::string>(s, "family", "delta4", where)); };
  auto branch = [&] { return parse_branch(get_opt<std::string>(s, "branch", "counter-white", where)); };
  if (id == "red-within-r") {
    check_keys(s, where, {"id", "radius"});
    return red_within_subject(get_req<int>(s, "radius", where));
  }
  if (id == "gadget-rule") {
    check_keys(s, where, {"id", "family", "branch", "radius"});
    return gadget_rule_subject(family(), branch(), get_req<int>(s, "radius", where));
  }
  if (id == "coin") {
    check_keys(s, where, {"id", "family", "branch"});
    return coin_subject(family(), branch());
  }
  if (id == "noisy-rule") {
    check_keys(s, where, {"id", "family", "branch", "radius", "flip_prob"});
    return noisy_rule_subject(family(), branch(), get_req<int>(s, "radius", where),
                              get_opt<double>(s, "flip_prob", 0.05, where));
  }
  if (id == "exact") {
    check_keys(s, where, {"id", "family", "branch"});
    return exact_pipeline_subject(family(), branch());
  }
  if (id == "approx") {
    check_keys(s, where, {"id", "family", "branch", "epsilon", "radius_c", "beta_c"});
    DecomposeParams p;
    p.epsilon = get_opt<double>(s, "epsilon", 0.1, where);
    p.radius_c = get_opt<double>(s, "radius_c", 2.0, where);
    p.beta_c = get_opt<double>(s, "beta_c", 0.5, where);
    return approx_pipeline_subject(family(), branch(), p);
  }
  std::string known;
  for (const auto& k : subject_ids()) known += (known.empty() ? "" : ", ") + k;
  throw InputError("subject: unknown id '" + id + "' (known: " + known + ")");
}

// ------------------------------------------------------------ run record --

struct RunContext {
  std::string command;
  std::string dir;
  json config;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, bool>> asserts;
  std::vector<std::string> artifacts;
  json reports = json::object();
  std::string markdown;

  void check(const std::string& name, bool pass) { asserts.emplace_back(name, pass); }
  bool all_pass() const {
    for (const auto& [name, pass] : asserts)
      if (!pass) return false;
    return true;
  }
  void save(const std::string& name, const std::string& content) {
    save_text(dir + "/" + name, content);
    artifacts.push_back(name);
  }
};

int finish(RunContext& ctx, std::chrono::steady_clock::time_point t0) {
  std::string md = "# " + ctx.command + "\n\n" + ctx.markdown;
  if (!ctx.asserts.empty()) {
    md += "\n## Checks\n\n| check | result |\n|---|---|\n";
    for (const auto& [name, pass] : ctx.asserts) md += "| " + name + " | " + (pass ? "pass" : "FAIL") + " |\n";
  }
  save_text(ctx.dir + "/report.md", md);
  ctx.artifacts.push_back("report.md");

  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
  json rec;
  rec["command"] = ctx.command;
  rec["version"] = k_version;
  rec["seed"] = ctx.seed;
  rec["config"] = ctx.config;
  rec["reports"] = ctx.reports;
  json asserts = json::array();
  for (const auto& [name, pass] : ctx.asserts) asserts.push_back(json{{"name", name}, {"pass", pass}});
  rec["asserts"] = asserts;
  rec["artifacts"] = ctx.artifacts;
  rec["wall_clock_ms"] = ms.count();  // excluded from determinism comparisons
  save_text(ctx.dir + "/run.json", rec.dump(2) + "\n");

  for (const auto& [name, pass] : ctx.asserts)
    if (!pass) {
      std::cerr << ctx.command << ": check failed: " << name << "\n";
      return 1;
    }
  std::cout << ctx.command << ": ok, artifacts in " << ctx.dir << "\n";
  return 0;
}

std::string certificate_to_json(const ExpansionCertificate& c) {
  json j;
  j["method"] = to_string(c.method);
  j["delta_hat"] = c.delta_hat;
  if (c.lambda2)
    j["lambda2"] = *c.lambda2;
  else
    j["lambda2"] = nullptr;
  j["tolerance"] = c.tolerance;
  j["n"] = c.n;
  j["degree"] = c.degree;
  return j.dump(2) + "\n";
}

ExpansionCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open certificate");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
  check_keys(j, path, {"method", "delta_hat", "lambda2", "tolerance", "n", "degree"});
  ExpansionCertificate c;
  std::string method = get_req<std::string>(j, "method", path);
  if (method == "exhaustive")
    c.method = ExpansionMethod::exhaustive;
  else if (method == "spectral")
    c.method = ExpansionMethod::spectral;
  else
    throw InputError(path + ": unknown method '" + method + "'");
  c.delta_hat = get_req<double>(j, "delta_hat", path);
  if (j.contains("lambda2") && !j.at("lambda2").is_null()) c.lambda2 = get_req<double>(j, "lambda2", path);
  c.tolerance = get_opt<double>(j, "tolerance", 0.0, path);
  c.n = get_req<int>(j, "n", path);
  c.degree = get_opt<int>(j, "degree", -1, path);
  return c;
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss << x;
  return ss.str();
}

// ------------------------------------------------------------- commands --

int cmd_gen(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "gen", {"n", "seed", "out", "method", "tolerance"});
  int n = get_req<int>(cfg, "n", "gen");
  std::string method = get_opt<std::string>(cfg, "method", "auto", "gen");
  double tol = get_opt<double>(cfg, "tolerance", 1e-8, "gen");

  Graph g = random_4regular(n, ctx.seed);
  BalancedDigraph d = euler_orient(g);

  ExpansionCertificate cert;
  if (method == "exhaustive" || (method == "auto" && n <= 20))
    cert = edge_expansion_exhaustive(g);
  else if (method == "spectral" || method == "auto")
    cert = spectral_expansion(g, tol, derive_seed(ctx.seed, 0x5ecULL));
  else
    throw InputError("gen: unknown method '" + method + "' (auto, exhaustive, spectral)");

  ctx.save("graph.txt", graph_to_string(g));
  ctx.save("digraph.txt", digraph_to_string(d));
  ctx.save("certificate.json", certificate_to_json(cert));

  bool balanced = true;
  for (int v = 0; v < d.size(); ++v)
    balanced = balanced && d.in_neighbours(v).size() == 2 && d.out_neighbours(v).size() == 2;
  ctx.check("in_out_degree_2", balanced);
  ctx.check("round_trip", load_graph(ctx.dir + "/graph.txt") == g);
  if (is_connected(g)) ctx.check("certificate_positive", cert.delta_hat > 0);

  ctx.reports["certificate"] = json::parse(certificate_to_json(cert));
  ctx.markdown = "4-regular graph, n = " + std::to_string(n) + ", orientation balanced.\n\n" +
                 "| quantity | value |\n|---|---|\n| method | " + to_string(cert.method) +
                 " |\n| delta_hat | " + fmt(cert.delta_hat) + " |\n";
  if (cert.lambda2) ctx.markdown += "| lambda2 | " + fmt(*cert.lambda2) + " |\n";
  return 0;
}

int cmd_orient(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "orient", {"graph", "seed", "out"});
  Graph g = load_graph(get_req<std::string>(cfg, "graph", "orient"));
  BalancedDigraph d = euler_orient(g);
  ctx.save("digraph.txt", digraph_to_string(d));
  bool balanced = true;
  for (int v = 0; v < d.size(); ++v)
    balanced = balanced && d.in_neighbours(v).size() == d.out_neighbours(v).size();
  ctx.check("in_equals_out", balanced);
  ctx.reports["orient"] = json{{"n", d.size()}, {"arcs", static_cast<int>(d.arcs().size())}};
  ctx.markdown = "Balanced orientation of " + std::to_string(d.size()) + " vertices, " +
                 std::to_string(d.arcs().size()) + " arcs.\n";
  return 0;
}

int cmd_solve_exact(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "solve-exact", {"graph", "colouring", "seed", "out"});
  Graph g = load_graph(get_req<std::string>(cfg, "graph", "solve-exact"));
  Colouring c = load_colouring(get_req<std::string>(cfg, "colouring", "solve-exact"));
  Matching m = hopcroft_karp(g, c);
  VertexCover cover = koenig_cover(g, c, m);

  std::ostringstream cover_text;
  write_vertex_set(cover_text, g.size(), cover);
  ctx.save("cover.txt", cover_text.str());
  ctx.check("cover_valid", verify_cover(g, cover));
  ctx.check("duality_tight", static_cast<std::int64_t>(cover.size()) == m.size);
  ctx.reports["solve"] = json{{"n", g.size()}, {"matching", m.size}, {"cover", cover.size()}};
  ctx.markdown = "| quantity | value |\n|---|---|\n| n | " + std::to_string(g.size()) +
                 " |\n| maximum matching | " + std::to_string(m.size) + " |\n| minimum cover | " +
                 std::to_string(cover.size()) + " |\n";
  return 0;
}

int cmd_approx(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "approx", {"graph", "colouring", "epsilon", "radius_c", "beta_c", "seed", "out"});
  Graph g = load_graph(get_req<std::string>(cfg, "graph", "approx"));
  Colouring c = load_colouring(get_req<std::string>(cfg, "colouring", "approx"));
  DecomposeParams params;
  params.epsilon = get_opt<double>(cfg, "epsilon", 0.1, "approx");
  params.radius_c = get_opt<double>(cfg, "radius_c", 2.0, "approx");
  params.beta_c = get_opt<double>(cfg, "beta_c", 0.5, "approx");

  ApproxResult res = approx_2vc(g, c, params, ctx.seed);
  VertexCover exact = opt_2vc(g, c);
  int weak_diam = max_weak_diameter(g, res.decomposition);
  double retention =
      g.size() == 0 ? 1.0 : 1.0 - static_cast<double>(res.decomposition.removed.size()) / g.size();
  double ratio = exact.empty() ? 1.0 : static_cast<double>(res.cover.size()) / static_cast<double>(exact.size());

  std::ostringstream cover_text;
  write_vertex_set(cover_text, g.size(), res.cover);
  ctx.save("cover.txt", cover_text.str());

  ctx.check("cover_valid", verify_cover(g, res.cover));
  ctx.check("weak_diameter_within_radius", weak_diam <= res.decomposition.radius);
  ctx.check("size_within_structural_bound",
            static_cast<std::int64_t>(res.cover.size()) <=
                res.component_opt_total + static_cast<std::int64_t>(res.decomposition.removed.size()));

  json rep;
  rep["n"] = g.size();
  rep["epsilon"] = params.epsilon;
  rep["radius"] = res.decomposition.radius;
  rep["blocks"] = res.decomposition.blocks.size();
  rep["removed"] = res.decomposition.removed.size();
  rep["retention"] = retention;
  rep["weak_diameter"] = weak_diam;
  rep["cover"] = res.cover.size();
  rep["opt"] = exact.size();
  rep["ratio"] = ratio;
  ctx.reports["approx"] = rep;
  ctx.markdown = "| quantity | value |\n|---|---|\n| n | " + std::to_string(g.size()) + " |\n| radius | " +
                 std::to_string(res.decomposition.radius) + " |\n| retention | " + fmt(retention) +
                 " |\n| weak diameter | " + std::to_string(weak_diam) + " |\n| cover | " +
                 std::to_string(res.cover.size()) + " |\n| optimum | " + std::to_string(exact.size()) +
                 " |\n| ratio | " + fmt(ratio) + " |\n";
  return 0;
}

int cmd_build_pi(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "build-pi", {"digraph", "labelling", "family", "branch", "seed", "out"});
  BalancedDigraph d = load_digraph(get_req<std::string>(cfg, "digraph", "build-pi"));
  Labelling l;
  if (cfg.contains("labelling"))
    l = load_labelling(get_req<std::string>(cfg, "labelling", "build-pi"));
  else
    l.assign(static_cast<std::size_t>(d.size()), Label::red);
  GadgetFamily family = parse_family(get_opt<std::string>(cfg, "family", "delta4", "build-pi"));
  Branch branch = parse_branch(get_opt<std::string>(cfg, "branch", "counter-white", "build-pi"));

  GadgetInstance inst = build_pi(d, l, family, branch);
  ctx.save("pi.txt", graph_to_string(inst.pi));
  ctx.save("pi_colouring.txt", colouring_to_string(inst.colouring));
  ctx.save("pi_map.txt", instance_map_to_string(inst));

  int cap = family == GadgetFamily::delta4 ? 4 : 3;
  int max_deg = 0;
  for (int p = 0; p < inst.pi.size(); ++p) max_deg = std::max(max_deg, inst.pi.degree(p));
  VertexCover opt = opt_2vc(inst.pi, inst.colouring);

  ctx.check("degree_cap", max_deg <= cap);
  ctx.check("proper_bicolouring", proper_bicolouring(inst.pi, inst.colouring));
  ctx.reports["build"] = json{{"family", to_string(family)}, {"branch", to_string(branch)},
                              {"source_n", d.size()},        {"pi_n", inst.pi.size()},
                              {"pi_m", inst.pi.edge_count()}, {"max_degree", max_deg},
                              {"opt", opt.size()}};
  ctx.markdown = "| quantity | value |\n|---|---|\n| family | " + to_string(family) + " |\n| branch | " +
                 to_string(branch) + " |\n| source n | " + std::to_string(d.size()) + " |\n| pi n | " +
                 std::to_string(inst.pi.size()) + " |\n| pi m | " + std::to_string(inst.pi.edge_count()) +
                 " |\n| max degree | " + std::to_string(max_deg) + " |\n| optimum cover | " +
                 std::to_string(opt.size()) + " |\n";
  return 0;
}

int cmd_fool(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(ctx.config, "fool",
             {"digraph", "subject", "trials", "mode", "permute_order", "certificate", "seed", "out"});
  BalancedDigraph d = load_digraph(get_req<std::string>(cfg, "digraph", "fool"));
  if (!cfg.contains("subject")) throw InputError("fool: missing key 'subject'");
  RecutSubject s = subject_from_config(cfg.at("subject"));

  FoolingParams params;
  params.trials = get_opt<int>(cfg, "trials", 1, "fool");
  std::string mode = get_opt<std::string>(cfg, "mode", "auto", "fool");
  if (mode == "auto")
    params.mode = SweepMode::automatic;
  else if (mode == "full")
    params.mode = SweepMode::full;
  else if (mode == "incremental")
    params.mode = SweepMode::incremental;
  else
    throw InputError("fool: unknown mode '" + mode + "' (auto, full, incremental)");
  params.permute_order = get_opt<bool>(cfg, "permute_order", false, "fool");

  RecutConstraintCheck constraints = check_recut_constraints(s, d, ctx.seed);
  FoolingReport rep = fooling_search(d, s, params, ctx.seed);

  ctx.save("fool.json", fooling_json(rep));
  ctx.save("fool.csv", fooling_csv(rep));
  ctx.save("l_star.txt", labelling_to_string(rep.l_star));
  ctx.save("l_star_out.txt", labelling_to_string(rep.l_star_out));
  ctx.reports["fooling"] = json::parse(fooling_json(rep));
  ctx.reports["recut_constraints"] =
      json{{"all_red_ok", constraints.all_red_ok}, {"all_blue_ok", constraints.all_blue_ok}};

  ctx.check("step_bound", rep.step_bound_ok);
  ctx.check("near_balance", rep.deviation_ok);
  if (constraints.passes()) {
    ctx.check("endpoint_all_red", rep.r_curve.front() == static_cast<double>(rep.n));
    ctx.check("endpoint_all_blue", rep.r_curve.back() == 0.0);
  }

  double ref = -1.0;
  if (cfg.contains("certificate")) {
    ExpansionCertificate cert = load_certificate(get_req<std::string>(cfg, "certificate", "fool"));
    CutCertification cc = certify_cut(d, rep.l_star, s, cert, ctx.seed);
    ctx.save("certify.json", certification_json(cc));
    ctx.reports["certification"] = json::parse(certification_json(cc));
    ctx.check("cut_bound", cc.holds);
    ref = cert.delta_hat / 4.0;
  }

  ctx.markdown = "Subject: " + rep.subject + (constraints.passes() ? "" : " (recut constraints not satisfied)") +
                 "\n\n| n | radius | i* | deviation | boundary | reference delta_hat/4 |\n|---|---|---|---|---|---|\n| " +
                 std::to_string(rep.n) + " | " + std::to_string(rep.radius) + " | " + std::to_string(rep.i_star) +
                 " | " + fmt(rep.deviation) + " | " + fmt(rep.boundary_star.value()) + " | " +
                 (ref < 0 ? std::string("-") : fmt(ref)) + " |\n";
  return 0;
}

int cmd_certify(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "certify", {"digraph", "labelling", "subject", "certificate", "seed", "out"});
  BalancedDigraph d = load_digraph(get_req<std::string>(cfg, "digraph", "certify"));
  Labelling l = load_labelling(get_req<std::string>(cfg, "labelling", "certify"));
  if (!cfg.contains("subject")) throw InputError("certify: missing key 'subject'");
  RecutSubject s = subject_from_config(cfg.at("subject"));
  ExpansionCertificate cert = load_certificate(get_req<std::string>(cfg, "certificate", "certify"));

  CutCertification cc = certify_cut(d, l, s, cert, ctx.seed);
  ctx.save("certify.json", certification_json(cc));
  ctx.reports["certification"] = json::parse(certification_json(cc));
  ctx.check("cut_bound", cc.holds);
  ctx.markdown = "| quantity | value |\n|---|---|\n| subject | " + cc.subject + " |\n| red | " +
                 std::to_string(cc.red) + " |\n| boundary | " + fmt(cc.boundary.value()) +
                 " |\n| lower bound | " + fmt(cc.lower_bound) + " |\n| delta_hat | " + fmt(cc.delta_hat) +
                 " |\n";
  return 0;
}

int cmd_concentrate(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "concentrate", {"digraph", "labelling", "subject", "trials", "deviations", "seed", "out"});
  BalancedDigraph d = load_digraph(get_req<std::string>(cfg, "digraph", "concentrate"));
  Labelling l;
  if (cfg.contains("labelling"))
    l = load_labelling(get_req<std::string>(cfg, "labelling", "concentrate"));
  else
    l.assign(static_cast<std::size_t>(d.size()), Label::red);
  if (!cfg.contains("subject")) throw InputError("concentrate: missing key 'subject'");
  RecutSubject s = subject_from_config(cfg.at("subject"));
  int trials = get_opt<int>(cfg, "trials", 500, "concentrate");
  std::vector<double> deviations = get_opt<std::vector<double>>(cfg, "deviations", {0.05, 0.1, 0.2}, "concentrate");

  ConcentrationReport rep = empirical_concentration(d, l, s, trials, deviations, ctx.seed);
  ctx.save("concentration.json", concentration_json(rep));
  ctx.save("concentration.csv", concentration_csv(rep));
  ctx.reports["concentration"] = json::parse(concentration_json(rep));

  ctx.markdown = "Subject: " + rep.subject + ", chi_hat = " + std::to_string(rep.chi_hat) + ", mean = " +
                 fmt(rep.mean) + "\n\n| deviation | upper tail | lower tail | bound |\n|---|---|---|---|\n";
  for (std::size_t i = 0; i < rep.deviations.size(); ++i) {
    double slack = 3.0 * std::sqrt(rep.bound[i] / rep.trials);
    ctx.check("tail_within_bound(dev=" + fmt(rep.deviations[i]) + ")",
              rep.upper_tail[i] <= rep.bound[i] + slack && rep.lower_tail[i] <= rep.bound[i] + slack);
    ctx.markdown += "| " + fmt(rep.deviations[i]) + " | " + fmt(rep.upper_tail[i]) + " | " +
                    fmt(rep.lower_tail[i]) + " | " + fmt(rep.bound[i]) + " |\n";
  }
  return 0;
}

int cmd_verify(RunContext& ctx) {
  const json& cfg = ctx.config;
  check_keys(cfg, "verify", {"seed", "out"});
  std::uint64_t seed = ctx.seed;

  // cover solvers against two independent brute forces
  {
    bool ok = true;
    Rng rng(derive_seed(seed, 0x7e57ULL));
    for (int i = 0; i < 60 && ok; ++i) {
      int a = 1 + static_cast<int>(rng.below(7));
      int b = 1 + static_cast<int>(rng.below(7));
      double p = 0.2 + 0.2 * static_cast<double>(rng.below(4));
      BipartiteSample s = random_bipartite(a, b, p, derive_seed(seed, 0xb1, static_cast<std::uint64_t>(i)));
      Matching m = hopcroft_karp(s.graph, s.colouring);
      VertexCover cover = koenig_cover(s.graph, s.colouring, m);
      ok = ok && m.size == brute_max_matching(s.graph);
      ok = ok && static_cast<std::int64_t>(cover.size()) == brute_min_vc_mask(s.graph);
      ok = ok && static_cast<std::int64_t>(cover.size()) == brute_min_vertex_cover(s.graph);
      ok = ok && verify_cover(s.graph, cover);
    }
    ctx.check("koenig_vs_brute_force", ok);
  }

  // graph powers against plain distance search
  {
    bool ok = true;
    for (int trial = 0; trial < 4 && ok; ++trial) {
      Graph g = random_4regular(12 + 4 * trial, derive_seed(seed, 0x90aULL, static_cast<std::uint64_t>(trial)));
      for (int k = 0; k <= 3 && ok; ++k) {
        Graph p = power_graph(g, k);
        for (int v = 0; v < g.size() && ok; ++v) {
          auto dist = bfs_distances(g, v);
          for (int u = 0; u < g.size() && ok; ++u) {
            bool expect = u != v && dist[static_cast<std::size_t>(u)] >= 0 &&
                          dist[static_cast<std::size_t>(u)] <= k;
            ok = p.has_edge(v, u) == expect;
          }
        }
      }
    }
    ctx.check("power_graph_vs_bfs", ok);
  }

  // spectral certificates never exceed the exhaustive optimum
  {
    bool ok = true;
    std::vector<Graph> corpus;
    for (int n : {6, 8, 10, 12}) {
      std::vector<std::pair<int, int>> cyc;
      for (int i = 0; i < n; ++i) cyc.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
      corpus.push_back(Graph::from_edges(n, cyc));
    }
    for (int n : {4, 5}) {
      std::vector<std::pair<int, int>> all;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
      corpus.push_back(Graph::from_edges(n, all));
    }
    corpus.push_back(Graph::from_edges(
        10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}}));
    for (int n : {12, 16, 20})
      corpus.push_back(random_4regular(n, derive_seed(seed, 0x4e9ULL, static_cast<std::uint64_t>(n))));
    for (const Graph& g : corpus) {
      ExpansionCertificate sp = spectral_expansion(g, 1e-8, derive_seed(seed, 0x5caULL));
      ExpansionCertificate ex = edge_expansion_exhaustive(g);
      ok = ok && sp.delta_hat <= ex.delta_hat;
    }
    ctx.check("spectral_below_exhaustive", ok);
  }

  // reduction optima: edge gadgets
  {
    bool ok = true;
    for (int n : {6, 30}) {
      BalancedDigraph d = euler_orient(random_4regular(n, derive_seed(seed, 0xd4ULL, static_cast<std::uint64_t>(n))));
      Labelling red(static_cast<std::size_t>(n), Label::red);
      GadgetInstance inst = build_pi(d, red, GadgetFamily::delta4);
      ok = ok && static_cast<int>(opt_2vc(inst.pi, inst.colouring).size()) == n;
      if (n == 6) ok = ok && brute_min_vc_mask(inst.pi) == n;
    }
    ctx.check("edge_gadget_optimum", ok);
  }

  // reduction optima: path gadgets, with the homogeneous-class structure
  {
    bool ok = true;
    for (int n : {6, 8}) {
      BalancedDigraph d = euler_orient(random_4regular(n, derive_seed(seed, 0xd3ULL, static_cast<std::uint64_t>(n))));
      ok = ok && verify_delta3_reconstruction(d).passes();
    }
    ctx.check("path_gadget_reconstruction", ok);
  }

  // strict parsers reject malformed input
  {
    bool ok = false;
    try {
      std::istringstream bad("3 2\n1 0\n1 2\n");  // unsorted edge endpoints
      read_graph(bad);
    } catch (const InputError&) {
      ok = true;
    }
    ctx.check("parser_rejects_malformed", ok);
  }

  json rep;
  for (const auto& [name, pass] : ctx.asserts) rep[name] = pass;
  ctx.reports["verify"] = rep;
  ctx.markdown = "Oracle cross-checks over solvers, certificates, reductions, and parsers.\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"recut and bipartite vertex cover laboratory"};
  app.require_subcommand(1);

  struct Opts {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out;
  };
  std::map<std::string, Opts> opts;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "generate a random 4-regular graph, its balanced orientation, and an expansion certificate"},
      {"orient", "balance-orient an even-degree graph along an Euler tour"},
      {"solve-exact", "minimum vertex cover via matching duality"},
      {"approx", "decomposition-based (1+eps) vertex cover"},
      {"build-pi", "build the gadget reduction instance for a digraph and labelling"},
      {"fool", "sweep labellings to force a near-balanced output"},
      {"certify", "check the expansion-forced cut bound at a labelling"},
      {"concentrate", "empirical concentration of a randomized subject"},
      {"verify", "run the built-in oracle cross-checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    Opts& o = opts[name];
    sub->add_option("--config", o.config, "JSON experiment config")->required();
    sub->add_option("--seed", o.seed, "seed override");
    sub->add_option("--out", o.out, "output directory override");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const Opts& o = opts[name];
  auto t0 = std::chrono::steady_clock::now();
  try {
    RunContext ctx;
    ctx.command = name;
    ctx.config = load_config(o.config);
    if (!ctx.config.is_object()) throw InputError(o.config + ": config must be a JSON object");
    ctx.seed = o.seed ? *o.seed : get_opt<std::uint64_t>(ctx.config, "seed", 1, name);
    ctx.dir = o.out ? *o.out : get_opt<std::string>(ctx.config, "out", "runs/" + name, name);
    std::filesystem::create_directories(ctx.dir);

    int rc = 0;
    if (name == "gen")
      rc = cmd_gen(ctx);
    else if (name == "orient")
      rc = cmd_orient(ctx);
    else if (name == "solve-exact")
      rc = cmd_solve_exact(ctx);
    else if (name == "approx")
      rc = cmd_approx(ctx);
    else if (name == "build-pi")
      rc = cmd_build_pi(ctx);
    else if (name == "fool")
      rc = cmd_fool(ctx);
    else if (name == "certify")
      rc = cmd_certify(ctx);
    else if (name == "concentrate")
      rc = cmd_concentrate(ctx);
    else if (name == "verify")
      rc = cmd_verify(ctx);
    if (rc != 0) return rc;
    return finish(ctx, t0);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const InapplicableError& e) {
    std::cerr << "inapplicable: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
