#pragma once

#include <optional>
#include <string>

#include "vclab/graph.hpp"

namespace vclab {

enum class ExpansionMethod { exhaustive, spectral };

// Certified lower bound on the edge expansion
//   h(G) = min over nonempty S with |S| <= n/2 of e(S, V\S) / |S|.
// method = exhaustive: delta_hat is h(G) itself (exact minimum).
// method = spectral:   delta_hat = (d - lambda2)/2 for d-regular G, a lower
//                      bound on h(G); lambda2 is the second-largest adjacency
//                      eigenvalue.
struct ExpansionCertificate {
  ExpansionMethod method = ExpansionMethod::exhaustive;
  double delta_hat = 0.0;
  std::optional<double> lambda2;
  double tolerance = 0.0;
  int n = 0;
  int degree = -1;  // -1 when not regular (exhaustive only)
};

// Exact minimization over all 2^(n-1) cuts; requires n <= cutoff.
ExpansionCertificate edge_expansion_exhaustive(const Graph& g, int cutoff = 20);

// Power iteration for lambda2 on a connected d-regular graph. The iteration
// runs on A + d*I with the all-ones eigenvector deflated, which makes
// lambda2 + d the dominant eigenvalue on the complement; plain deflation of A
// would converge to the most negative eigenvalue instead whenever
// |lambda_min| > lambda2 (e.g. C6). A small guard (64*tol) is added to the
// reported lambda2 so delta_hat stays a sound lower bound at equality cases.
// Throws InternalError if the Rayleigh quotient fails to settle within
// ceil(10 * n * log n) iterations.
ExpansionCertificate spectral_expansion(const Graph& g, double tol = 1e-8, std::uint64_t seed = 1);

std::string to_string(ExpansionMethod m);

}  // namespace vclab
