#include "resistor/lanczos.hpp"

#include <chrono>
#include <cmath>

#include "resistor/errors.hpp"
#include "resistor/kernels.hpp"

namespace resistor {

namespace {

/// One pass of the recurrence. Holds v_{i-1}, v_i and scratch; optionally
/// the whole basis for reorthogonalization.
class Recurrence {
 public:
  Recurrence(const Graph& g, Vertex s, Vertex t, bool reorthogonalize)
      : g_(g), prev_(g.node_count(), 0.0), cur_(g.node_count(), 0.0), next_(g.node_count()),
        reorthogonalize_(reorthogonalize) {
    const double ds = g.degree(s);
    const double dt = g.degree(t);
    scale_ = std::sqrt(1.0 / ds + 1.0 / dt);
    cur_[s] = 1.0 / std::sqrt(ds) / scale_;
    cur_[t] = -1.0 / std::sqrt(dt) / scale_;
    if (reorthogonalize_) basis_.push_back(cur_);
  }

  double scale() const { return scale_; }
  const std::vector<double>& current() const { return cur_; }

  struct Step {
    double alpha;
    double beta;
  };

  /// Computes alpha_i and beta_{i+1}; advances to v_{i+1} unless beta breaks down.
  Step step() {
    apply_normalized_adjacency(g_, cur_, next_);
    const std::size_t n = next_.size();
    for (std::size_t u = 0; u < n; ++u) next_[u] -= beta_ * prev_[u];
    const double alpha = dot(next_, cur_);
    for (std::size_t u = 0; u < n; ++u) next_[u] -= alpha * cur_[u];
    if (reorthogonalize_) {
      for (const auto& q : basis_) {
        const double c = dot(next_, q);
        for (std::size_t u = 0; u < n; ++u) next_[u] -= c * q[u];
      }
    }
    const double beta = norm2(next_);
    if (beta >= kBreakdown) {
      for (std::size_t u = 0; u < n; ++u) next_[u] /= beta;
      prev_.swap(cur_);
      cur_.swap(next_);
      if (reorthogonalize_) basis_.push_back(cur_);
    }
    beta_ = beta;
    return {alpha, beta};
  }

 private:
  const Graph& g_;
  std::vector<double> prev_;
  std::vector<double> cur_;
  std::vector<double> next_;
  std::vector<std::vector<double>> basis_;
  double scale_ = 0.0;
  double beta_ = 0.0;
  bool reorthogonalize_;
};

LanczosRun run_recurrence(const Graph& g, Vertex s, Vertex t, std::size_t k, bool reorthogonalize) {
  Recurrence rec(g, s, t, reorthogonalize);
  LanczosRun run;
  run.v1_scale = rec.scale();
  for (std::size_t i = 1; i <= k; ++i) {
    const auto [alpha, beta] = rec.step();
    run.t.alpha.push_back(alpha);
    run.k_effective = i;
    if (beta < kBreakdown) {
      run.breakdown = true;
      break;
    }
    if (i < k) run.t.beta.push_back(beta);
  }
  return run;
}

void check_query(const Graph& g, Vertex s, Vertex t, std::size_t k) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (k == 0) throw std::invalid_argument("Lanczos needs k >= 1");
}

}  // namespace

LanczosResult lanczos_rd(const Graph& g, Vertex s, Vertex t, std::size_t k, const LanczosOptions& options) {
  check_query(g, s, t, k);
  const auto start = std::chrono::steady_clock::now();
  LanczosResult result;
  result.estimate.method = Method::Lanczos;
  if (s == t) return result;

  result.run = run_recurrence(g, s, t, k, options.reorthogonalize);
  const auto y = tridiag_solve_e1(result.run.t);
  const double scale2 = result.run.v1_scale * result.run.v1_scale;
  result.estimate.value = scale2 * y[0];
  result.estimate.iterations = result.run.k_effective;
  result.estimate.touched_edges = result.run.k_effective * g.arc_count();
  result.estimate.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<double> prefix_estimates(const LanczosRun& run) {
  std::vector<double> out;
  out.reserve(run.k_effective);
  const double scale2 = run.v1_scale * run.v1_scale;
  for (std::size_t j = 1; j <= run.t.size(); ++j) out.push_back(scale2 * tridiag_solve_e1(run.t.leading(j))[0]);
  return out;
}

std::vector<double> lanczos_potential(const Graph& g, Vertex s, Vertex t, std::size_t k) {
  check_query(g, s, t, k);
  const std::size_t n = g.node_count();
  std::vector<double> phi(n, 0.0);
  if (s == t) return phi;
  const LanczosRun run = run_recurrence(g, s, t, k, false);
  const auto y = tridiag_solve_e1(run.t);

  Recurrence replay(g, s, t, false);
  for (std::size_t i = 0; i < run.k_effective; ++i) {
    const auto& v = replay.current();
    for (std::size_t u = 0; u < n; ++u) phi[u] += y[i] * v[u];
    if (i + 1 < run.k_effective) replay.step();
  }
  const auto& isd = g.inv_sqrt_degrees();
  for (std::size_t u = 0; u < n; ++u) phi[u] *= run.v1_scale * isd[u];
  return phi;
}

std::vector<std::vector<double>> lanczos_basis(const Graph& g, Vertex s, Vertex t, std::size_t k,
                                               const LanczosOptions& options) {
  check_query(g, s, t, k);
  std::vector<std::vector<double>> basis;
  if (s == t) return basis;
  Recurrence rec(g, s, t, options.reorthogonalize);
  for (std::size_t i = 1; i <= k; ++i) {
    basis.push_back(rec.current());
    if (i == k) break;
    if (rec.step().beta < kBreakdown) break;
  }
  return basis;
}

std::size_t lanczos_steps(double kappa, double eps) {
  const double k = std::sqrt(kappa) * std::log(kappa / eps);
  return k < 1.0 ? 1 : static_cast<std::size_t>(std::ceil(k));
}

}  // namespace resistor
