#include "resistor/spectral.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "resistor/errors.hpp"
#include "resistor/kernels.hpp"
#include "resistor/random.hpp"

namespace resistor {

namespace {

constexpr std::uint64_t kStartSeed = 0x5eed'1234'abcdULL;

void normalize(std::vector<double>& x) {
  const double nrm = norm2(x);
  for (double& v : x) v /= nrm;
}

void deflate(std::vector<double>& x, const std::vector<double>& u1) {
  const double c = dot(x, u1);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] -= c * u1[i];
}

struct Iteration {
  double rho = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  double residual = 0.0;
  std::vector<double> x;
};

/// Power iteration on (I + sign A)/2 (sign = 0 means plain A), optionally
/// deflating u1.
Iteration power_iterate(const Graph& g, double sign, const std::vector<double>* u1, double tol,
                        std::size_t max_iter) {
  const std::size_t n = g.node_count();
  Rng rng(kStartSeed);
  Iteration it;
  it.x.resize(n);
  for (double& v : it.x) v = rng.uniform() - 0.5;
  if (u1) deflate(it.x, *u1);
  normalize(it.x);
  std::vector<double> y(n);
  auto apply = [&](const std::vector<double>& in, std::vector<double>& out) {
    apply_normalized_adjacency(g, in, out);
    if (sign != 0.0) {
      for (std::size_t i = 0; i < n; ++i) out[i] = 0.5 * (in[i] + sign * out[i]);
    }
    if (u1) deflate(out, *u1);
  };
  double prev = 0.0;
  for (std::size_t k = 1; k <= max_iter; ++k) {
    apply(it.x, y);
    it.rho = dot(it.x, y);
    it.iterations = k;
    if (k > 1 && std::abs(it.rho - prev) < tol) {
      it.converged = true;
      double r2 = 0.0;
      for (std::size_t i = 0; i < n; ++i) r2 += (y[i] - it.rho * it.x[i]) * (y[i] - it.rho * it.x[i]);
      it.residual = std::sqrt(r2);
      normalize(y);
      it.x.swap(y);
      return it;
    }
    prev = it.rho;
    normalize(y);
    it.x.swap(y);
  }
  return it;
}

std::vector<double> principal_vector(const Graph& g) {
  std::vector<double> u1(g.node_count());
  for (Vertex u = 0; u < g.node_count(); ++u) u1[u] = std::sqrt(g.degree(u));
  normalize(u1);
  return u1;
}

}  // namespace

SpectralEstimate estimate_spectrum(const Graph& g, double tol, std::size_t max_iter) {
  if (g.node_count() < 2) throw DomainError("spectrum needs at least two vertices");
  if (!is_connected(g)) throw DomainError("spectrum needs a connected graph");
  const auto u1 = principal_vector(g);
  SpectralEstimate est;
  Iteration hi = power_iterate(g, 1.0, &u1, tol, max_iter);
  Iteration lo = power_iterate(g, -1.0, nullptr, tol, max_iter);
  est.lambda2_a = 2.0 * hi.rho - 1.0;
  est.lambda_min_a = 1.0 - 2.0 * lo.rho;
  est.mu2 = 1.0 - est.lambda2_a;
  est.kappa = 2.0 / est.mu2;
  est.iterations = hi.iterations + lo.iterations;
  est.residual = hi.residual;
  est.converged = hi.converged && lo.converged;
  est.lambda2_vector = std::move(hi.x);
  return est;
}

PowerResult deflated_power_direct(const Graph& g, double tol, std::size_t max_iter) {
  const auto u1 = principal_vector(g);
  Iteration it = power_iterate(g, 0.0, &u1, tol, max_iter);
  return {it.rho, it.iterations, it.converged};
}

DenseSpectrum dense_spectrum(const Graph& g, std::size_t cap) {
  const std::size_t n = g.node_count();
  if (n > cap) throw DomainError("dense spectrum refuses n = " + std::to_string(n));
  if (n < 2) throw DomainError("spectrum needs at least two vertices");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex u = 0; u < n; ++u) {
    const auto nb = g.neighbors(u);
    const auto w = g.weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i) a(u, nb[i]) = w[i] * g.inv_sqrt_degree(u) * g.inv_sqrt_degree(nb[i]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw SingularSystemError("dense eigensolve failed");
  DenseSpectrum out;
  const auto& ev = solver.eigenvalues();
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  out.lambda_min_a = out.eigenvalues.front();
  out.lambda2_a = out.eigenvalues[n - 2];
  out.kappa = 2.0 / (1.0 - out.lambda2_a);
  return out;
}

}  // namespace resistor
