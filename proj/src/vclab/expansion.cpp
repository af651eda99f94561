#include "vclab/expansion.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "vclab/rng.hpp"

namespace vclab {

ExpansionCertificate edge_expansion_exhaustive(const Graph& g, int cutoff) {
  int n = g.size();
  if (n > cutoff || n > 30) throw InputError("edge_expansion_exhaustive: n exceeds cutoff " + std::to_string(std::min(cutoff, 30)));
  if (n < 2) throw InputError("edge_expansion_exhaustive: need at least 2 vertices");
  auto es = g.edges();
  double best = std::numeric_limits<double>::infinity();
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int size = std::popcount(mask);
    if (2 * size > n) continue;
    int crossing = 0;
    for (auto [u, v] : es)
      crossing += (((mask >> u) & 1u) != ((mask >> v) & 1u));
    best = std::min(best, static_cast<double>(crossing) / size);
  }
  ExpansionCertificate cert;
  cert.method = ExpansionMethod::exhaustive;
  cert.delta_hat = best;
  cert.tolerance = 0.0;
  cert.n = n;
  int d = g.degree(0);
  bool regular = true;
  for (int v = 1; v < n; ++v) regular = regular && g.degree(v) == d;
  cert.degree = regular ? d : -1;
  return cert;
}

ExpansionCertificate spectral_expansion(const Graph& g, double tol, std::uint64_t seed) {
  int n = g.size();
  if (n < 2) throw InputError("spectral_expansion: need at least 2 vertices");
  int d = g.degree(0);
  for (int v = 1; v < n; ++v)
    if (g.degree(v) != d) throw InputError("spectral_expansion: graph is not regular");
  if (!is_connected(g)) throw InputError("spectral_expansion: graph is not connected");

  Eigen::VectorXd x(n);
  Rng rng(derive_seed(seed, 0x53e1f2ULL));
  for (int i = 0; i < n; ++i) x(i) = rng.uniform01() - 0.5;

  auto deflate = [&](Eigen::VectorXd& v) { v.array() -= v.mean(); };
  auto matvec = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd y = static_cast<double>(d) * v;  // shift
    for (int u = 0; u < n; ++u) {
      double acc = 0.0;
      for (int w : g.neighbours(u)) acc += v(w);
      y(u) += acc;
    }
    return y;
  };

  deflate(x);
  if (x.norm() < 1e-12) {
    x.setZero();
    x(0) = 1.0;
    deflate(x);
  }
  x.normalize();

  std::int64_t cap = static_cast<std::int64_t>(std::ceil(10.0 * n * std::max(1.0, std::log(static_cast<double>(n)))));
  double rho_prev = std::numeric_limits<double>::infinity();
  double rho = 0.0;
  int settled = 0;
  bool converged = false;
  for (std::int64_t it = 0; it < cap; ++it) {
    Eigen::VectorXd y = matvec(x);
    deflate(y);
    rho = x.dot(y);
    double norm = y.norm();
    if (norm < 1e-300) {
      // the deflated operator annihilates x: lambda2 + d = 0
      rho = 0.0;
      converged = true;
      break;
    }
    x = y / norm;
    if (std::abs(rho - rho_prev) <= tol) {
      if (++settled >= 3) {
        converged = true;
        break;
      }
    } else {
      settled = 0;
    }
    rho_prev = rho;
  }
  if (!converged) throw InternalError("spectral_expansion: power iteration did not converge within iteration cap");

  double lambda2 = rho - d;
  double guard = 64.0 * tol;
  ExpansionCertificate cert;
  cert.method = ExpansionMethod::spectral;
  cert.lambda2 = lambda2;
  cert.delta_hat = (d - (lambda2 + guard)) / 2.0;
  cert.tolerance = tol;
  cert.n = n;
  cert.degree = d;
  return cert;
}

std::string to_string(ExpansionMethod m) {
  return m == ExpansionMethod::exhaustive ? "exhaustive" : "spectral";
}

}  // namespace vclab
