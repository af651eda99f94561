#include "vclab/subjects.hpp"

#include <sstream>

#include "vclab/matching.hpp"

namespace vclab {

namespace {

std::string rule_tag(GadgetFamily family, Branch branch) {
  return to_string(family) + "," + to_string(branch);
}

}  // namespace

LocalAlgorithm gadget_cover_rule(GadgetFamily family, Branch branch, int radius) {
  int min_r = family == GadgetFamily::delta4 ? 1 : 3;
  if (radius < min_r)
    throw InputError("gadget_cover_rule: " + to_string(family) + " needs radius >= " + std::to_string(min_r));
  LocalAlgorithm a;
  a.name = "gadget-rule(" + rule_tag(family, branch) + ",r=" + std::to_string(radius) + ")";
  a.radius = radius;
  a.mode = Mode::anonymous;
  bool cw = branch == Branch::counter_white;
  if (family == GadgetFamily::delta4) {
    // anchor side carries the pendant and reaches degree 4 exactly then
    Colour anchor = cw ? Colour::black : Colour::white;
    a.eval = [anchor, radius](const LocalView& view) {
      if (!view.has_colours()) throw InputError("gadget rule needs a colouring");
      const Graph& g = view.graph;
      if (view.colours[0] == anchor) return g.degree(0) == 4 ? 1 : 0;
      if (g.degree(0) == 1) return 0;  // pendant
      if (radius == 1) return 0;
      for (int u = 1; u < g.size(); ++u)
        if (view.colours[static_cast<std::size_t>(u)] == anchor && view.dist[static_cast<std::size_t>(u)] <= radius - 1 &&
            g.degree(u) == 4)
          return 0;
      return 1;
    };
  } else {
    Colour pc = cw ? Colour::white : Colour::black;  // pendant colour
    a.eval = [pc, radius](const LocalView& view) {
      if (!view.has_colours()) throw InputError("gadget rule needs a colouring");
      const Graph& g = view.graph;
      if (view.colours[0] != pc) {
        // other side joins next to a pendant only
        for (int u = 1; u < g.size(); ++u)
          if (view.dist[static_cast<std::size_t>(u)] == 1 && view.colours[static_cast<std::size_t>(u)] == pc &&
              g.degree(u) == 1)
            return 1;
        return 0;
      }
      if (g.degree(0) == 1) return 0;  // pendant
      for (int u = 1; u < g.size(); ++u)
        if (view.colours[static_cast<std::size_t>(u)] == pc && view.dist[static_cast<std::size_t>(u)] <= radius - 1 &&
            g.degree(u) == 1)
          return 0;
      return 1;
    };
  }
  return a;
}

LocalAlgorithm coin_cover_rule() {
  LocalAlgorithm a;
  a.name = "coin";
  a.radius = 0;
  a.mode = Mode::randomized_ids;
  a.eval = [](const LocalView& view) { return tape_bit(view.tapes[0], 0) ? 1 : 0; };
  return a;
}

LocalAlgorithm noisy_cover_rule(GadgetFamily family, Branch branch, int radius, double flip_prob) {
  if (flip_prob < 0.0 || flip_prob > 1.0) throw InputError("noisy_cover_rule: flip probability outside [0,1]");
  LocalAlgorithm base = gadget_cover_rule(family, branch, radius);
  LocalAlgorithm a;
  std::ostringstream name;
  name << "noisy-rule(" << rule_tag(family, branch) << ",r=" << radius << ",q=" << flip_prob << ")";
  a.name = name.str();
  a.radius = radius;
  a.mode = Mode::randomized_ids;
  a.eval = [base = std::move(base.eval), flip_prob](const LocalView& view) {
    int o = base(view);
    double u = static_cast<double>(view.tapes[0][1] >> 11) * 0x1.0p-53;
    return u < flip_prob ? 1 - o : o;
  };
  return a;
}

SubjectRun run_subject(const RecutSubject& s, const BalancedDigraph& d, const Labelling& l,
                       std::uint64_t seed, std::uint64_t salt) {
  int n = d.size();
  if (static_cast<int>(l.size()) != n) throw InputError("run_subject: labelling size mismatch");
  SubjectRun out;
  if (s.direct) {
    SimInputs in = SimInputs::from_labels(l);
    SimulationRun run = run_local(d.underlying(), in, *s.direct, seed, salt);
    out.l_out.resize(l.size());
    for (int v = 0; v < n; ++v)
      out.l_out[static_cast<std::size_t>(v)] =
          run.outputs[static_cast<std::size_t>(v)] == out_blue ? Label::blue : Label::red;
  } else {
    GadgetInstance inst = build_pi(d, l, s.family, s.branch);
    std::vector<int> cover;
    if (s.on_pi) {
      SimInputs in = SimInputs::from_colours(inst.colouring);
      in.tape_keys = inst.tape_keys;
      SimulationRun run = run_local(inst.pi, in, *s.on_pi, seed, salt);
      for (int p = 0; p < inst.pi.size(); ++p)
        if (run.outputs[static_cast<std::size_t>(p)] != 0) cover.push_back(p);
    } else if (s.solver) {
      cover = s.solver(inst, seed);
    } else {
      throw InternalError("run_subject: subject '" + s.name + "' has no implementation");
    }
    for (int p : cover)
      (inst.colouring[static_cast<std::size_t>(p)] == Colour::white ? out.cover_whites : out.cover_blacks) += 1;
    out.l_out = extract_recut(inst, cover).l_out;
    out.cover = std::move(cover);
  }
  for (Label lab : out.l_out)
    if (lab == Label::red) ++out.red_count;
  out.boundary = boundary_fraction(d.underlying(), out.l_out);
  out.bad = count_bad(d, out.l_out,
                      s.branch == Branch::counter_white ? BadDirection::out_neighbour : BadDirection::in_neighbour);
  return out;
}

RecutSubject red_within_subject(int radius) {
  RecutSubject s;
  s.direct = recut_red_within_r(radius);
  s.name = "red-within-r(r=" + std::to_string(radius) + ")";
  s.radius = radius;
  return s;
}

RecutSubject gadget_rule_subject(GadgetFamily family, Branch branch, int radius) {
  RecutSubject s;
  s.on_pi = gadget_cover_rule(family, branch, radius);
  s.name = "gadget-rule(" + rule_tag(family, branch) + ",r=" + std::to_string(radius) + ")";
  s.radius = radius;  // reduction distances dominate source distances
  s.uses_reduction = true;
  s.family = family;
  s.branch = branch;
  return s;
}

RecutSubject coin_subject(GadgetFamily family, Branch branch) {
  RecutSubject s;
  s.on_pi = coin_cover_rule();
  s.name = "coin(" + rule_tag(family, branch) + ")";
  s.radius = 0;
  s.randomized = true;
  s.uses_reduction = true;
  s.family = family;
  s.branch = branch;
  return s;
}

RecutSubject noisy_rule_subject(GadgetFamily family, Branch branch, int radius, double flip_prob) {
  RecutSubject s;
  s.on_pi = noisy_cover_rule(family, branch, radius, flip_prob);
  std::ostringstream name;
  name << "noisy-rule(" << rule_tag(family, branch) << ",r=" << radius << ",q=" << flip_prob << ")";
  s.name = name.str();
  s.radius = radius;
  s.randomized = true;
  s.uses_reduction = true;
  s.family = family;
  s.branch = branch;
  return s;
}

RecutSubject exact_pipeline_subject(GadgetFamily family, Branch branch) {
  RecutSubject s;
  s.solver = [](const GadgetInstance& inst, std::uint64_t) { return opt_2vc(inst.pi, inst.colouring); };
  s.name = "exact(" + rule_tag(family, branch) + ")";
  s.uses_reduction = true;
  s.family = family;
  s.branch = branch;
  return s;
}

RecutSubject approx_pipeline_subject(GadgetFamily family, Branch branch, DecomposeParams params) {
  RecutSubject s;
  s.solver = [params](const GadgetInstance& inst, std::uint64_t seed) {
    return approx_2vc(inst.pi, inst.colouring, params, seed).cover;
  };
  std::ostringstream name;
  name << "approx(" << rule_tag(family, branch) << ",eps=" << params.epsilon << ")";
  s.name = name.str();
  s.randomized = true;
  s.uses_reduction = true;
  s.family = family;
  s.branch = branch;
  return s;
}

std::vector<std::string> subject_ids() {
  return {"red-within-r", "gadget-rule", "coin", "noisy-rule", "exact", "approx"};
}

RecutConstraintCheck check_recut_constraints(const RecutSubject& s, const BalancedDigraph& d,
                                             std::uint64_t seed) {
  int n = d.size();
  RecutConstraintCheck chk;
  Labelling all_red(static_cast<std::size_t>(n), Label::red);
  Labelling all_blue(static_cast<std::size_t>(n), Label::blue);
  SubjectRun red_run = run_subject(s, d, all_red, seed, 0);
  SubjectRun blue_run = run_subject(s, d, all_blue, seed, 0);
  chk.all_red_ok = red_run.red_count == n;
  chk.all_blue_ok = blue_run.red_count == 0;
  return chk;
}

}  // namespace vclab
