#include "resistor/baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "resistor/errors.hpp"
#include "resistor/kernels.hpp"

namespace resistor {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

LaplacianPseudoinverse::LaplacianPseudoinverse(const Graph& g, std::size_t cap) : n_(g.node_count()) {
  if (n_ > cap) {
    throw DomainError("exact oracle refuses n = " + std::to_string(n_) + " (cap " + std::to_string(cap) + ")");
  }
  const auto n = static_cast<Eigen::Index>(n_);
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (Vertex u = 0; u < n_; ++u) {
    lap(u, u) = g.degree(u);
    const auto nb = g.neighbors(u);
    const auto w = g.weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i) lap(u, nb[i]) -= w[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap);
  if (solver.info() != Eigen::Success) throw SingularSystemError("dense Laplacian eigensolve failed");
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
  // Connected graphs have a simple null space: the smallest eigenvalue.
  if (n > 1 && eigenvalues_(1) < 1e-9) throw DomainError("exact oracle needs a connected graph");
}

double LaplacianPseudoinverse::resistance(Vertex s, Vertex t) const {
  if (s >= n_ || t >= n_) throw IndexError("vertex out of range");
  if (s == t) return 0.0;
  double r = 0.0;
  for (Eigen::Index i = 1; i < eigenvalues_.size(); ++i) {
    const double diff = eigenvectors_(s, i) - eigenvectors_(t, i);
    r += diff * diff / eigenvalues_(i);
  }
  return r;
}

std::vector<double> LaplacianPseudoinverse::potential(Vertex s, Vertex t) const {
  if (s >= n_ || t >= n_) throw IndexError("vertex out of range");
  Eigen::VectorXd coeff(eigenvalues_.size());
  coeff(0) = 0.0;
  for (Eigen::Index i = 1; i < eigenvalues_.size(); ++i) {
    coeff(i) = (eigenvectors_(s, i) - eigenvectors_(t, i)) / eigenvalues_(i);
  }
  const Eigen::VectorXd phi = eigenvectors_ * coeff;
  return {phi.data(), phi.data() + phi.size()};
}

double exact_rd(const Graph& g, Vertex s, Vertex t, std::size_t cap) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) return 0.0;
  return LaplacianPseudoinverse(g, cap).resistance(s, t);
}

RDEstimate power_method_rd(const Graph& g, Vertex s, Vertex t, std::size_t l,
                           const PowerMethodObserver& observer) {
  g.check_vertex(s);
  g.check_vertex(t);
  const auto start = std::chrono::steady_clock::now();
  RDEstimate est;
  est.method = Method::PowerMethod;
  if (s == t) return est;

  const double two_ds = 2.0 * g.degree(s);
  const double two_dt = 2.0 * g.degree(t);
  std::vector<double> r(g.node_count(), 0.0);
  std::vector<double> next(g.node_count());
  r[s] = 1.0;
  r[t] = -1.0;
  double acc = 0.0;
  for (std::size_t i = 0; i <= l; ++i) {
    acc += r[s] / two_ds - r[t] / two_dt;
    est.iterations = i;
    if (observer && !observer(i, acc)) break;
    if (i == l) break;
    apply_lazy_walk(g, r, next);
    r.swap(next);
    est.touched_edges += g.arc_count();
  }
  est.value = acc;
  est.seconds = seconds_since(start);
  return est;
}

RDEstimate random_walk_rd(const Graph& g, Vertex s, Vertex t, std::size_t l, std::size_t n_r,
                          std::uint64_t seed, unsigned threads) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (g.is_weighted()) {
    throw UnsupportedInputError("random-walk estimator supports unweighted graphs only");
  }
  if (n_r == 0) throw std::invalid_argument("random-walk estimator needs n_r >= 1");
  const auto start = std::chrono::steady_clock::now();
  RDEstimate est;
  est.method = Method::RandomWalk;
  est.iterations = l;
  if (s == t) return est;

  const Vertex origin[2] = {s, t};
  // hits[(side * (l + 1) + i) * 2 + end]: walks from origin[side] of length i
  // ending at s (end 0) or t (end 1)
  const std::size_t slots = 2 * (l + 1) * 2;
  threads = std::max(1u, threads);
  std::vector<std::vector<std::uint64_t>> hits(threads, std::vector<std::uint64_t>(slots, 0));
  std::vector<std::uint64_t> steps(threads, 0);

  const auto& offsets = g.offsets();
  const auto& nbrs = g.neighbor_array();
  auto work = [&](unsigned worker) {
    const std::size_t lo = n_r * worker / threads;
    const std::size_t hi = n_r * (worker + 1) / threads;
    auto& local = hits[worker];
    for (std::size_t side = 0; side < 2; ++side) {
      for (std::size_t i = 0; i <= l; ++i) {
        for (std::size_t j = lo; j < hi; ++j) {
          Rng rng = Rng::stream(seed, side, i, j);
          Vertex at = origin[side];
          for (std::size_t step = 0; step < i; ++step) {
            if (rng.coin()) continue;
            const std::uint64_t deg = offsets[at + 1] - offsets[at];
            at = nbrs[offsets[at] + rng.below(deg)];
          }
          steps[worker] += i;
          const std::size_t slot = (side * (l + 1) + i) * 2;
          if (at == s) ++local[slot];
          if (at == t) ++local[slot + 1];
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::vector<std::uint64_t> total(slots, 0);
  for (unsigned w = 0; w < threads; ++w) {
    for (std::size_t k = 0; k < slots; ++k) total[k] += hits[w][k];
    est.touched_edges += steps[w];
  }

  const double scale_s = 1.0 / (2.0 * static_cast<double>(n_r) * g.degree(s));
  const double scale_t = 1.0 / (2.0 * static_cast<double>(n_r) * g.degree(t));
  double acc = 0.0;
  for (std::size_t i = 0; i <= l; ++i) {
    const auto x_s = static_cast<double>(total[(0 * (l + 1) + i) * 2]);
    const auto x_t = static_cast<double>(total[(0 * (l + 1) + i) * 2 + 1]);
    const auto y_s = static_cast<double>(total[(1 * (l + 1) + i) * 2]);
    const auto y_t = static_cast<double>(total[(1 * (l + 1) + i) * 2 + 1]);
    acc += x_s * scale_s - x_t * scale_t + y_t * scale_t - y_s * scale_s;
  }
  est.value = acc;
  est.seconds = seconds_since(start);
  return est;
}

std::size_t power_method_steps(double kappa, double eps) {
  const double l = 2.0 * kappa * std::log(kappa / eps);
  return l <= 0.0 ? 0 : static_cast<std::size_t>(std::ceil(l));
}

}  // namespace resistor
