#pragma once

// The fooling-sequence adversary, cut certification against an expansion
// certificate, and concentration experiments for randomized subjects.

#include <cstdint>
#include <string>
#include <vector>

#include "vclab/expansion.hpp"
#include "vclab/subjects.hpp"

namespace vclab {

enum class SweepMode { automatic, full, incremental };

struct FoolingParams {
  int trials = 1;                  // > 1: average independent runs per index
  SweepMode mode = SweepMode::automatic;
  bool permute_order = false;      // seeded random sweep order instead of 0..n-1
};

// Sweep over labellings l^0..l^n (l^i is blue on the first i sweep vertices).
// With one trial the per-index red counts are exact; with several they are
// means over independent runs sharing tapes across indices (common random
// numbers), so the per-step continuity bound applies either way.
struct FoolingReport {
  std::string subject;
  int n = 0;
  int radius = -1;
  int trials = 1;
  bool incremental = false;
  std::vector<int> order;                 // v_1..v_n
  std::vector<double> r_curve;            // R(l^0)..R(l^n)
  std::vector<std::int64_t> ball_sizes;   // |ball(v_i, radius)| per step; empty if radius < 0
  double max_step = 0.0;                  // max |R(l^i) - R(l^(i-1))|
  bool step_bound_ok = true;              // every step within its ball size
  int i_star = 0;                         // smallest index minimizing |R - n/2|
  double r_star = 0.0;
  double deviation = 0.0;                 // |r_star - n/2|
  std::int64_t deviation_cap = -1;        // ceil(5^radius / 2) on 4-regular sources
  bool deviation_ok = true;
  Labelling l_star;                       // input labelling at i_star
  Labelling l_star_out;                   // extracted output there (first trial)
  EdgeFraction boundary_star;
  std::int64_t bad_star = 0;
};

// Throws InapplicableError when R(l^0) < R(l^n) + n/2 (no crossing of n/2 is
// forced); the message carries both endpoint values. Automatic mode sweeps
// incrementally (recomputing only inside ball(v_i, radius + 2)) whenever the
// subject is local and trials == 1.
FoolingReport fooling_search(const BalancedDigraph& d, const RecutSubject& s, const FoolingParams& params,
                             std::uint64_t seed);

struct CutCertification {
  std::string subject;
  std::string method;
  int n = 0;
  std::int64_t red = 0;
  EdgeFraction boundary;
  double delta_hat = 0.0;
  double lower_bound = 0.0;  // delta_hat * min(red, n - red) / |E|
  bool holds = false;
};

// Reruns the subject on l_star and checks the expansion-forced cut bound
// crossing >= delta_hat * min(R, n - R) in its integer form.
CutCertification certify_cut(const BalancedDigraph& d, const Labelling& l_star, const RecutSubject& s,
                             const ExpansionCertificate& cert, std::uint64_t seed);

struct BranchSelection {
  Branch branch = Branch::counter_white;
  double mean_whites = 0.0;
  double mean_blacks = 0.0;
  double sd_diff = 0.0;    // sample sd of per-trial whites - blacks
  double z = 0.0;          // mean difference over its standard error
  double confidence = 1.0; // normal-approximation P(chosen side is the larger)
  int trials = 0;
  std::int64_t min_w_plus_b = 0;
  bool all_valid = true;
};

// Measures which colour the subject's covers prefer on the all-red instance
// and returns the branch countering it (ties go to counter_white). Needs a
// cover-producing subject; direct recut subjects are inapplicable.
BranchSelection select_branch(const BalancedDigraph& d, const RecutSubject& s, int trials, std::uint64_t seed);

// Greedy colour count of the k-th graph power; at most max degree of G^k + 1.
int chromatic_upper(const Graph& g, int k);

// One-sided tail bound exp(-2 * deviation^2 * n / chi) for a sum of n
// indicators whose dependency graph has chromatic number at most chi.
double janson_tail(std::int64_t n, double deviation, std::int64_t chi);

struct ConcentrationReport {
  std::string subject;
  int n = 0;
  int radius = 0;
  int trials = 0;
  int chi_hat = 1;                  // greedy bound for the 2*radius power
  double mean = 0.0;
  double variance = 0.0;            // sample variance
  std::vector<double> deviations;
  std::vector<double> upper_tail;   // freq(R >= mean + dev * n)
  std::vector<double> lower_tail;   // freq(R <= mean - dev * n)
  std::vector<double> bound;        // janson_tail(n, dev, chi_hat)
  std::vector<std::int64_t> samples;
};

// Runs the subject `trials` times with independent seeds on a fixed input and
// compares empirical tail frequencies (measured around the sample mean)
// against the chromatic tail bound. Local subjects only.
ConcentrationReport empirical_concentration(const BalancedDigraph& d, const Labelling& l, const RecutSubject& s,
                                            int trials, const std::vector<double>& deviations, std::uint64_t seed);

// JSON (pretty, trailing newline) and CSV serializations. Numeric payloads
// are identical across reruns with the same config and seed.
std::string fooling_json(const FoolingReport& rep);
std::string fooling_csv(const FoolingReport& rep);
std::string certification_json(const CutCertification& cert);
std::string selection_json(const BranchSelection& sel);
std::string concentration_json(const ConcentrationReport& rep);
std::string concentration_csv(const ConcentrationReport& rep);

}  // namespace vclab
