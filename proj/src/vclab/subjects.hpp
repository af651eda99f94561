#pragma once

// Algorithms under test, wrapped as uniform "subjects": each maps an oriented
// instance plus an input labelling to an output labelling. Three shapes:
//   direct  - a local rule run on the source graph itself
//   on_pi   - a local vertex-cover rule run on the reduction instance,
//             composed with cover extraction
//   solver  - a whole-graph cover solver plugged into the same reduction
// The string factories at the bottom give the CLI and the test harness one
// shared catalogue.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vclab/decompose.hpp"
#include "vclab/gadgets.hpp"
#include "vclab/local_sim.hpp"

namespace vclab {

using CoverSolver = std::function<std::vector<int>(const GadgetInstance&, std::uint64_t)>;

struct RecutSubject {
  std::string name;
  int radius = -1;  // locality radius on the source graph, -1 = global
  bool randomized = false;
  bool uses_reduction = false;
  GadgetFamily family = GadgetFamily::delta4;
  Branch branch = Branch::counter_white;
  // exactly one of the three is set
  std::optional<LocalAlgorithm> direct;
  std::optional<LocalAlgorithm> on_pi;
  CoverSolver solver;

  bool local() const { return radius >= 0; }
};

struct SubjectRun {
  Labelling l_out;
  std::int64_t red_count = 0;
  EdgeFraction boundary;       // of l_out on the source graph
  std::int64_t bad = 0;        // red vertices with a blue neighbour on the countered side
  std::vector<int> cover;      // reduction subjects only
  std::int64_t cover_whites = 0;
  std::int64_t cover_blacks = 0;
};

SubjectRun run_subject(const RecutSubject& s, const BalancedDigraph& d, const Labelling& l,
                       std::uint64_t seed, std::uint64_t salt = 0);

// Local cover rules on reduction instances. Decisions use only vertex colours
// and degrees that are fully visible at the rule's radius, so the output is
// invariant under relabelling.
//
// delta4 needs radius >= 1:
//   r = 1: white vertices never join; black vertices join iff their own degree
//          is 4 (only pendant-carrying gadgets have a degree-4 black).
//   r >= 2: as above, plus white vertices join unless some black vertex with
//          certified degree 4 lies within distance r-1 (degree-1 whites are
//          pendants and never join).
// delta3 needs radius >= 3:
//   whites join unless a certified degree-1 white (a pendant) lies within
//   distance r-1; blacks join iff a degree-1 white sits at distance 1.
//   On the all-blue input the chosen blacks alone do not form a valid cover;
//   the rule demonstrates locality limits, not approximation quality.
// The counter-black variants swap the two colours' roles throughout.
LocalAlgorithm gadget_cover_rule(GadgetFamily family, Branch branch, int radius);

// Per-vertex independent coin at radius 0: join the cover iff the first tape
// bit is set. On pendant-free instances the extracted labelling is a sum of
// independent per-gadget indicators.
LocalAlgorithm coin_cover_rule();

// gadget_cover_rule with each decision flipped independently with probability
// flip_prob, read off the vertex's random tape.
LocalAlgorithm noisy_cover_rule(GadgetFamily family, Branch branch, int radius, double flip_prob);

// Subject factories. Registry ids in parentheses.
RecutSubject red_within_subject(int radius);                                       // "red-within-r"
RecutSubject gadget_rule_subject(GadgetFamily family, Branch branch, int radius);  // "gadget-rule"
RecutSubject coin_subject(GadgetFamily family, Branch branch);                     // "coin"
RecutSubject noisy_rule_subject(GadgetFamily family, Branch branch, int radius,
                                double flip_prob);                                 // "noisy-rule"
RecutSubject exact_pipeline_subject(GadgetFamily family, Branch branch);           // "exact"
RecutSubject approx_pipeline_subject(GadgetFamily family, Branch branch,
                                     DecomposeParams params);                      // "approx"

std::vector<std::string> subject_ids();

struct RecutConstraintCheck {
  bool all_red_ok = false;
  bool all_blue_ok = false;
  bool passes() const { return all_red_ok && all_blue_ok; }
};

// Runs the subject on the all-red and all-blue inputs; passes iff the outputs
// are all-red and all-blue respectively.
RecutConstraintCheck check_recut_constraints(const RecutSubject& s, const BalancedDigraph& d,
                                             std::uint64_t seed);

}  // namespace vclab
