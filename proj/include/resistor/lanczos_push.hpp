#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "resistor/estimate.hpp"
#include "resistor/graph.hpp"
#include "resistor/sparse_vector.hpp"
#include "resistor/tridiagonal.hpp"

namespace resistor {

struct PushConfig {
  std::size_t k = 10;
  /// Pruning threshold; 0 reproduces the plain recurrence on sparse supports.
  double epsilon = 1e-3;
  bool collect_stats = false;
  /// Also measures the per-iteration residual against the exact matvec
  /// (costs an exact sparse matvec per iteration).
  bool diagnostics = false;
  /// Keep every iterate v_1..v_k in the result.
  bool keep_iterates = false;
  /// Per-iteration threshold eps_i (1-based); overrides `epsilon` when set.
  std::function<double(std::size_t)> epsilon_schedule;
  /// Replaces the thresholded subset S_1 (used to replay hand-worked traces).
  std::optional<std::vector<Vertex>> first_subset_override;
  /// Sign of the t-component of v_1; -1 is e_s/sqrt(d_s) - e_t/sqrt(d_t).
  double sink_sign = -1.0;

  void validate() const;
  double epsilon_at(std::size_t i) const { return epsilon_schedule ? epsilon_schedule(i) : epsilon; }
};

struct PushIterationStats {
  std::size_t subset_size = 0;       // |S_i|
  std::size_t support_size = 0;      // |supp(v_i)|
  std::size_t edges_relaxed = 0;     // arcs pushed by the pruned matvec
  double c2_term = 0.0;              // ||v_i||_1 + ||A v_i^+||_1 + ||A v_i^-||_1
  /// max_u |delta_i(u)| / (eps d_u); the residual bound asks for <= 3.
  double delta_ratio = 0.0;
  double delta_max_abs = 0.0;
};

struct PushStats {
  std::vector<PushIterationStats> iterations;
  std::size_t touched_edges = 0;       // sum of edges_relaxed
  std::size_t inner_product_ops = 0;   // work spent on alpha and the subset updates
  std::size_t peak_support = 0;
};

struct PushResult {
  RDEstimate estimate;
  TridiagonalMatrix t;
  PushStats stats;
  std::size_t k_effective = 0;
  bool breakdown = false;
  /// <v_1, v_j> for j = 1..k_effective; these replace e1 because the
  /// pruned iterates are not orthogonal.
  std::vector<double> first_row;
  std::vector<SparseVector> iterates;
};

/// Reusable O(n) scratch; keeps per-query work proportional to the support.
class PushWorkspace {
 public:
  explicit PushWorkspace(std::size_t n) : acc_(n) {}
  SparseAccumulator& accumulator() { return acc_; }

 private:
  SparseAccumulator acc_;
};

/// Pruned matvec: from each nonzero v(u), push along (u, x) only when
/// |v(u)| > eps sqrt(d_u d_x). With eps = 0 this is the normalized adjacency
/// restricted to supp(v).
SparseVector amv(const Graph& g, const SparseVector& v, double eps, std::size_t* edges_relaxed = nullptr,
                 PushWorkspace* workspace = nullptr);

/// Entries with |v(u)| > eps d_u.
SparseVector restrict_to_subset(const SparseVector& v, const Graph& g, double eps);

/// Exact sparse normalized-adjacency product.
SparseVector sparse_normalized_adjacency(const Graph& g, const SparseVector& v, PushWorkspace* workspace = nullptr);

/// Local Lanczos with pruned matvec and subset-restricted updates.
/// Output (1/d_s + 1/d_t) sum_j <v_1, v_j> [(I - T)^{-1} e1]_j.
PushResult lanczos_push_rd(const Graph& g, Vertex s, Vertex t, const PushConfig& cfg,
                           PushWorkspace* workspace = nullptr);

struct AssumptionReport {
  bool pass = false;
  double t_min = 0.0;
  double t_max = 0.0;
  double lambda_min_a = 0.0;
  double lambda2_a = 0.0;
  /// t_min - lambda_min_A (>= -tol passes)
  double lower_margin = 0.0;
  /// lambda_2(A) - t_max (>= -tol passes)
  double upper_margin = 0.0;
};

/// Checks lambda(T) within [lambda_min(A) - tol, lambda_2(A) + tol].
AssumptionReport check_assumption(const TridiagonalMatrix& t, double lambda_min_a, double lambda2_a, double tol);

/// Both forms of max_{u in {s,t}, i <= k} ||T_i(P) e_u||_1.
struct C1Measurement {
  double weighted = 0.0;  // with the D^{1/2} factor
  double plain = 0.0;
};

C1Measurement measure_c1(const Graph& g, Vertex s, Vertex t, std::size_t k);
/// max_i of the per-iteration C2 terms; needs a run with collect_stats.
double measure_c2(const PushStats& stats);

struct WorkCaps {
  double c1 = 0.0;
  double c2 = 0.0;
  double c1_cap = 0.0;  // sqrt(m)
  double c2_cap = 0.0;  // 3 sqrt(n)
  bool c1_ok = false;
  bool c2_ok = false;
};

WorkCaps check_work_caps(const Graph& g, double c1, double c2, double tol = 1e-9);

}  // namespace resistor
