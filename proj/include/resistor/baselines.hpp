#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "resistor/estimate.hpp"
#include "resistor/graph.hpp"

namespace resistor {

inline constexpr std::size_t kDefaultExactCap = 2000;

/// Dense eigendecomposition of L = D - W with the null eigenvalue dropped.
/// Desk-scale only; it is the reference every estimator is checked against.
class LaplacianPseudoinverse {
 public:
  explicit LaplacianPseudoinverse(const Graph& g, std::size_t cap = kDefaultExactCap);

  /// (e_s - e_t)^T L^+ (e_s - e_t)
  double resistance(Vertex s, Vertex t) const;
  /// L^+ (e_s - e_t)
  std::vector<double> potential(Vertex s, Vertex t) const;

  const Eigen::VectorXd& eigenvalues() const { return eigenvalues_; }

 private:
  std::size_t n_;
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXd eigenvectors_;
};

double exact_rd(const Graph& g, Vertex s, Vertex t, std::size_t cap = kDefaultExactCap);

/// Called after each accumulation with (i, partial sum); return false to stop.
using PowerMethodObserver = std::function<bool(std::size_t, double)>;

/// Truncated lazy-walk series: for i = 0..l add r(s)/(2 d_s) - r(t)/(2 d_t)
/// then r <- (I/2 + P/2) r, starting from r = e_s - e_t.
RDEstimate power_method_rd(const Graph& g, Vertex s, Vertex t, std::size_t l,
                           const PowerMethodObserver& observer = {});

/// Monte-Carlo estimate of the same truncated series from lazy walks.
/// Walk j of length i from endpoint e draws from Rng::stream(seed, e, i, j),
/// so the result does not depend on `threads`. Unweighted graphs only.
RDEstimate random_walk_rd(const Graph& g, Vertex s, Vertex t, std::size_t l, std::size_t n_r,
                          std::uint64_t seed, unsigned threads = 1);

/// 2 kappa ln(kappa / eps), rounded up.
std::size_t power_method_steps(double kappa, double eps);

}  // namespace resistor
