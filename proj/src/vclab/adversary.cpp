#include "vclab/adversary.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "vclab/matching.hpp"

namespace vclab {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t tag, int t) {
  return t == 0 ? seed : derive_seed(seed, tag, static_cast<std::uint64_t>(t));
}

std::string fmt_num(double x) {
  std::array<char, 40> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

Labelling labelling_at(const std::vector<int>& order, int i) {
  Labelling l(order.size(), Label::red);
  for (int j = 0; j < i; ++j) l[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])] = Label::blue;
  return l;
}

// Incremental sweep engine for local subjects: after flipping v_i to blue,
// only outputs at sources within ball(v_i, radius + 2) are recomputed (the
// reduction never shrinks distances, so the true change set is already inside
// ball(v_i, radius)).
std::vector<double> sweep_incremental(const BalancedDigraph& d, const RecutSubject& s,
                                      const std::vector<int>& order, std::uint64_t seed) {
  const Graph& g = d.underlying();
  int n = d.size();
  std::vector<double> curve(static_cast<std::size_t>(n) + 1, 0.0);
  Labelling cur(static_cast<std::size_t>(n), Label::red);
  std::vector<Label> outs(static_cast<std::size_t>(n), Label::red);
  std::int64_t reds = 0;

  if (s.direct) {
    SubjectRun init = run_subject(s, d, cur, seed, 0);
    outs = init.l_out;
    reds = init.red_count;
    curve[0] = static_cast<double>(reds);
    for (int i = 1; i <= n; ++i) {
      int v = order[static_cast<std::size_t>(i - 1)];
      cur[static_cast<std::size_t>(v)] = Label::blue;
      SimInputs in = SimInputs::from_labels(cur);
      for (int u : ball(g, v, s.radius + 2)) {
        Label nl = run_at(g, in, *s.direct, u, seed, 0) == out_blue ? Label::blue : Label::red;
        if (nl != outs[static_cast<std::size_t>(u)]) {
          reds += nl == Label::red ? 1 : -1;
          outs[static_cast<std::size_t>(u)] = nl;
        }
      }
      curve[static_cast<std::size_t>(i)] = static_cast<double>(reds);
    }
    return curve;
  }

  // reduction + local cover rule; outputs are stored per (origin, role) so
  // they survive the vertex renumbering that pendant insertion causes
  Colour must = s.branch == Branch::counter_white ? Colour::black : Colour::white;
  std::vector<std::array<int, 8>> po(static_cast<std::size_t>(n), std::array<int, 8>{});
  auto extract_one = [&](const GadgetInstance& inst, int u) {
    bool nonempty = false;
    bool pure = true;
    for (int p : inst.gadget_vertices(u)) {
      if (po[static_cast<std::size_t>(u)][static_cast<std::size_t>(inst.role[static_cast<std::size_t>(p)])] == 0)
        continue;
      nonempty = true;
      if (inst.colouring[static_cast<std::size_t>(p)] != must) pure = false;
    }
    return nonempty && pure ? Label::blue : Label::red;
  };

  {
    GadgetInstance inst = build_pi(d, cur, s.family, s.branch);
    SimInputs in = SimInputs::from_colours(inst.colouring);
    in.tape_keys = inst.tape_keys;
    SimulationRun run = run_local(inst.pi, in, *s.on_pi, seed, 0);
    for (int p = 0; p < inst.pi.size(); ++p)
      po[static_cast<std::size_t>(inst.origin[static_cast<std::size_t>(p)])]
        [static_cast<std::size_t>(inst.role[static_cast<std::size_t>(p)])] = run.outputs[static_cast<std::size_t>(p)];
    for (int u = 0; u < n; ++u) {
      outs[static_cast<std::size_t>(u)] = extract_one(inst, u);
      if (outs[static_cast<std::size_t>(u)] == Label::red) ++reds;
    }
    curve[0] = static_cast<double>(reds);
  }
  for (int i = 1; i <= n; ++i) {
    int v = order[static_cast<std::size_t>(i - 1)];
    cur[static_cast<std::size_t>(v)] = Label::blue;
    GadgetInstance inst = build_pi(d, cur, s.family, s.branch);
    SimInputs in = SimInputs::from_colours(inst.colouring);
    in.tape_keys = inst.tape_keys;
    std::vector<int> affected = ball(g, v, s.radius + 2);
    for (int u : affected)
      for (int p : inst.gadget_vertices(u))
        po[static_cast<std::size_t>(u)][static_cast<std::size_t>(inst.role[static_cast<std::size_t>(p)])] =
            run_at(inst.pi, in, *s.on_pi, p, seed, 0);
    for (int u : affected) {
      Label nl = extract_one(inst, u);
      if (nl != outs[static_cast<std::size_t>(u)]) {
        reds += nl == Label::red ? 1 : -1;
        outs[static_cast<std::size_t>(u)] = nl;
      }
    }
    curve[static_cast<std::size_t>(i)] = static_cast<double>(reds);
  }
  return curve;
}

json edge_fraction_json(const EdgeFraction& f) {
  return json{{"crossing", f.crossing}, {"total", f.total}, {"value", f.value()}};
}

}  // namespace

FoolingReport fooling_search(const BalancedDigraph& d, const RecutSubject& s, const FoolingParams& params,
                             std::uint64_t seed) {
  if (params.trials < 1) throw InputError("fooling_search: trials must be >= 1");
  int n = d.size();
  const Graph& g = d.underlying();

  FoolingReport rep;
  rep.subject = s.name;
  rep.n = n;
  rep.radius = s.radius;
  rep.trials = params.trials;
  rep.order.resize(static_cast<std::size_t>(n));
  std::iota(rep.order.begin(), rep.order.end(), 0);
  if (params.permute_order) {
    Rng rng(derive_seed(seed, 0x0bd3ULL));
    rng.shuffle(rep.order);
  }

  auto mean_red = [&](int i) {
    double sum = 0.0;
    Labelling l = labelling_at(rep.order, i);
    for (int t = 0; t < params.trials; ++t)
      sum += static_cast<double>(
          run_subject(s, d, l, trial_seed(seed, 0xf001ULL, t), static_cast<std::uint64_t>(t)).red_count);
    return sum / params.trials;
  };

  double r0 = mean_red(0);
  double rn = mean_red(n);
  if (r0 < rn + n / 2.0) {
    std::ostringstream msg;
    msg << "fooling_search: inapplicable endpoints for '" << s.name << "': R(all-red) = " << r0
        << ", R(all-blue) = " << rn << ", need R(all-red) >= R(all-blue) + " << n / 2.0;
    throw InapplicableError(msg.str());
  }

  bool inc = params.mode == SweepMode::incremental ||
             (params.mode == SweepMode::automatic && s.local() && params.trials == 1);
  if (inc && (!s.local() || params.trials != 1))
    throw InputError("fooling_search: incremental sweep needs a local subject and trials == 1");
  rep.incremental = inc;

  if (inc) {
    rep.r_curve = sweep_incremental(d, s, rep.order, seed);
  } else {
    rep.r_curve.resize(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) rep.r_curve[static_cast<std::size_t>(i)] = mean_red(i);
  }

  if (s.radius >= 0) {
    rep.ball_sizes.resize(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
      rep.ball_sizes[static_cast<std::size_t>(i - 1)] =
          static_cast<std::int64_t>(ball(g, rep.order[static_cast<std::size_t>(i - 1)], s.radius).size());
  }
  for (int i = 1; i <= n; ++i) {
    double step = std::fabs(rep.r_curve[static_cast<std::size_t>(i)] - rep.r_curve[static_cast<std::size_t>(i - 1)]);
    rep.max_step = std::max(rep.max_step, step);
    if (s.radius >= 0 &&
        step > static_cast<double>(rep.ball_sizes[static_cast<std::size_t>(i - 1)]) + 1e-9)
      rep.step_bound_ok = false;
  }

  double best = std::fabs(rep.r_curve[0] - n / 2.0);
  rep.i_star = 0;
  for (int i = 1; i <= n; ++i) {
    double dev = std::fabs(rep.r_curve[static_cast<std::size_t>(i)] - n / 2.0);
    if (dev < best) {
      best = dev;
      rep.i_star = i;
    }
  }
  rep.r_star = rep.r_curve[static_cast<std::size_t>(rep.i_star)];
  rep.deviation = best;

  bool regular4 = n > 0;
  for (int v = 0; v < n; ++v) regular4 = regular4 && g.degree(v) == 4;
  if (s.radius >= 0 && s.radius <= 25 && regular4) {
    std::int64_t pow5 = 1;
    for (int i = 0; i < s.radius; ++i) pow5 *= 5;
    rep.deviation_cap = (pow5 + 1) / 2;
    rep.deviation_ok = rep.deviation <= static_cast<double>(rep.deviation_cap) + 1e-9;
  }

  rep.l_star = labelling_at(rep.order, rep.i_star);
  SubjectRun star = run_subject(s, d, rep.l_star, trial_seed(seed, 0xf001ULL, 0), 0);
  rep.l_star_out = star.l_out;
  rep.boundary_star = star.boundary;
  rep.bad_star = star.bad;
  return rep;
}

CutCertification certify_cut(const BalancedDigraph& d, const Labelling& l_star, const RecutSubject& s,
                             const ExpansionCertificate& cert, std::uint64_t seed) {
  if (cert.n != d.size()) throw InputError("certify_cut: certificate is for a different graph size");
  int n = d.size();
  SubjectRun run = run_subject(s, d, l_star, seed, 0);
  CutCertification c;
  c.subject = s.name;
  c.method = to_string(cert.method);
  c.n = n;
  c.red = run.red_count;
  c.boundary = run.boundary;
  c.delta_hat = cert.delta_hat;
  std::int64_t small_side = std::min(run.red_count, static_cast<std::int64_t>(n) - run.red_count);
  c.lower_bound = c.boundary.total == 0
                      ? 0.0
                      : cert.delta_hat * static_cast<double>(small_side) / static_cast<double>(c.boundary.total);
  // integer form crossing >= delta_hat * min(R, n-R); the 1e-9 slack is far
  // below the 1/|E| resolution of a genuine violation
  c.holds = static_cast<double>(c.boundary.crossing) + 1e-9 >= cert.delta_hat * static_cast<double>(small_side);
  return c;
}

BranchSelection select_branch(const BalancedDigraph& d, const RecutSubject& s, int trials, std::uint64_t seed) {
  if (trials < 1) throw InputError("select_branch: trials must be >= 1");
  if (!s.on_pi && !s.solver)
    throw InapplicableError("select_branch: subject '" + s.name + "' produces no cover");
  int n = d.size();
  Labelling all_red(static_cast<std::size_t>(n), Label::red);
  // no pendants on the all-red instance, so the provisional branch does not
  // affect the graph the covers are measured on
  GadgetInstance inst = build_pi(d, all_red, s.family, s.branch);

  BranchSelection sel;
  sel.trials = trials;
  sel.min_w_plus_b = inst.pi.size();
  double sum_w = 0.0;
  double sum_b = 0.0;
  std::vector<double> diffs;
  diffs.reserve(static_cast<std::size_t>(trials));
  for (int t = 0; t < trials; ++t) {
    std::uint64_t ts = trial_seed(seed, 0x5e1bULL, t);
    std::vector<int> cover;
    if (s.on_pi) {
      SimInputs in = SimInputs::from_colours(inst.colouring);
      in.tape_keys = inst.tape_keys;
      SimulationRun run = run_local(inst.pi, in, *s.on_pi, ts, static_cast<std::uint64_t>(t));
      for (int p = 0; p < inst.pi.size(); ++p)
        if (run.outputs[static_cast<std::size_t>(p)] != 0) cover.push_back(p);
    } else {
      cover = s.solver(inst, ts);
    }
    std::int64_t w = 0;
    std::int64_t b = 0;
    for (int p : cover)
      (inst.colouring[static_cast<std::size_t>(p)] == Colour::white ? w : b) += 1;
    sum_w += static_cast<double>(w);
    sum_b += static_cast<double>(b);
    diffs.push_back(static_cast<double>(w - b));
    sel.min_w_plus_b = std::min(sel.min_w_plus_b, w + b);
    sel.all_valid = sel.all_valid && verify_cover(inst.pi, cover);
  }
  sel.mean_whites = sum_w / trials;
  sel.mean_blacks = sum_b / trials;
  double mean_diff = sel.mean_whites - sel.mean_blacks;
  double ss = 0.0;
  for (double x : diffs) ss += (x - mean_diff) * (x - mean_diff);
  sel.sd_diff = trials > 1 ? std::sqrt(ss / (trials - 1)) : 0.0;
  double se = trials > 1 ? sel.sd_diff / std::sqrt(static_cast<double>(trials)) : 0.0;
  if (se == 0.0) {
    sel.z = mean_diff == 0.0 ? 0.0 : (mean_diff > 0 ? 1e9 : -1e9);
    sel.confidence = mean_diff == 0.0 ? 0.5 : 1.0;
  } else {
    sel.z = mean_diff / se;
    sel.confidence = 0.5 * std::erfc(-std::fabs(sel.z) / std::sqrt(2.0));
  }
  sel.branch = sel.mean_whites >= sel.mean_blacks ? Branch::counter_white : Branch::counter_black;
  return sel;
}

int chromatic_upper(const Graph& g, int k) {
  if (k < 0) throw InputError("chromatic_upper: negative power");
  Graph p = power_graph(g, k);
  int n = p.size();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::vector<int> mark(static_cast<std::size_t>(n) + 1, -1);
  int used = 1;
  for (int v = 0; v < n; ++v) {
    for (int u : p.neighbours(v)) {
      int cu = colour[static_cast<std::size_t>(u)];
      if (cu >= 0) mark[static_cast<std::size_t>(cu)] = v;
    }
    int c = 0;
    while (mark[static_cast<std::size_t>(c)] == v) ++c;
    colour[static_cast<std::size_t>(v)] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

double janson_tail(std::int64_t n, double deviation, std::int64_t chi) {
  if (n < 1) throw InputError("janson_tail: n must be >= 1");
  if (chi < 1) throw InputError("janson_tail: chi must be >= 1");
  if (deviation <= 0) throw InputError("janson_tail: deviation must be positive");
  return std::exp(-2.0 * deviation * deviation * static_cast<double>(n) / static_cast<double>(chi));
}

ConcentrationReport empirical_concentration(const BalancedDigraph& d, const Labelling& l, const RecutSubject& s,
                                            int trials, const std::vector<double>& deviations,
                                            std::uint64_t seed) {
  if (trials < 2) throw InputError("empirical_concentration: trials must be >= 2");
  if (!s.local())
    throw InapplicableError("empirical_concentration: the dependency bound needs a local subject");
  int n = d.size();

  ConcentrationReport rep;
  rep.subject = s.name;
  rep.n = n;
  rep.radius = s.radius;
  rep.trials = trials;
  rep.chi_hat = chromatic_upper(d.underlying(), 2 * s.radius);
  rep.deviations = deviations;
  rep.samples.reserve(static_cast<std::size_t>(trials));
  double sum = 0.0;
  for (int t = 0; t < trials; ++t) {
    std::int64_t r =
        run_subject(s, d, l, trial_seed(seed, 0xc07cULL, t), static_cast<std::uint64_t>(t)).red_count;
    rep.samples.push_back(r);
    sum += static_cast<double>(r);
  }
  rep.mean = sum / trials;
  double ss = 0.0;
  for (std::int64_t r : rep.samples) {
    double x = static_cast<double>(r) - rep.mean;
    ss += x * x;
  }
  rep.variance = ss / (trials - 1);
  for (double dev : deviations) {
    std::int64_t up = 0;
    std::int64_t down = 0;
    for (std::int64_t r : rep.samples) {
      if (static_cast<double>(r) >= rep.mean + dev * n) ++up;
      if (static_cast<double>(r) <= rep.mean - dev * n) ++down;
    }
    rep.upper_tail.push_back(static_cast<double>(up) / trials);
    rep.lower_tail.push_back(static_cast<double>(down) / trials);
    rep.bound.push_back(janson_tail(n, dev, rep.chi_hat));
  }
  return rep;
}

std::string fooling_json(const FoolingReport& rep) {
  json j;
  j["subject"] = rep.subject;
  j["n"] = rep.n;
  j["radius"] = rep.radius;
  j["trials"] = rep.trials;
  j["incremental"] = rep.incremental;
  j["order"] = rep.order;
  j["red_counts"] = rep.r_curve;
  j["ball_sizes"] = rep.ball_sizes;
  j["max_step"] = rep.max_step;
  j["step_bound_ok"] = rep.step_bound_ok;
  j["i_star"] = rep.i_star;
  j["r_star"] = rep.r_star;
  j["deviation"] = rep.deviation;
  j["deviation_cap"] = rep.deviation_cap;
  j["deviation_ok"] = rep.deviation_ok;
  j["boundary_star"] = edge_fraction_json(rep.boundary_star);
  j["bad_star"] = rep.bad_star;
  return j.dump(2) + "\n";
}

std::string fooling_csv(const FoolingReport& rep) {
  std::string out = "index,vertex,red,ball\n";
  for (std::size_t i = 0; i < rep.r_curve.size(); ++i) {
    out += std::to_string(i);
    out += ',';
    if (i > 0) out += std::to_string(rep.order[i - 1]);
    out += ',';
    out += fmt_num(rep.r_curve[i]);
    out += ',';
    if (i > 0 && !rep.ball_sizes.empty()) out += std::to_string(rep.ball_sizes[i - 1]);
    out += '\n';
  }
  return out;
}

std::string certification_json(const CutCertification& cert) {
  json j;
  j["subject"] = cert.subject;
  j["method"] = cert.method;
  j["n"] = cert.n;
  j["red"] = cert.red;
  j["boundary"] = edge_fraction_json(cert.boundary);
  j["delta_hat"] = cert.delta_hat;
  j["lower_bound"] = cert.lower_bound;
  j["holds"] = cert.holds;
  return j.dump(2) + "\n";
}

std::string selection_json(const BranchSelection& sel) {
  json j;
  j["branch"] = to_string(sel.branch);
  j["mean_whites"] = sel.mean_whites;
  j["mean_blacks"] = sel.mean_blacks;
  j["sd_diff"] = sel.sd_diff;
  j["z"] = sel.z;
  j["confidence"] = sel.confidence;
  j["trials"] = sel.trials;
  j["min_w_plus_b"] = sel.min_w_plus_b;
  j["all_valid"] = sel.all_valid;
  return j.dump(2) + "\n";
}

std::string concentration_json(const ConcentrationReport& rep) {
  json j;
  j["subject"] = rep.subject;
  j["n"] = rep.n;
  j["radius"] = rep.radius;
  j["trials"] = rep.trials;
  j["chi_hat"] = rep.chi_hat;
  j["mean"] = rep.mean;
  j["variance"] = rep.variance;
  j["deviations"] = rep.deviations;
  j["upper_tail"] = rep.upper_tail;
  j["lower_tail"] = rep.lower_tail;
  j["bound"] = rep.bound;
  return j.dump(2) + "\n";
}

std::string concentration_csv(const ConcentrationReport& rep) {
  std::string out = "trial,red\n";
  for (std::size_t t = 0; t < rep.samples.size(); ++t)
    out += std::to_string(t) + "," + std::to_string(rep.samples[t]) + "\n";
  return out;
}

}  // namespace vclab
