#pragma once

#include <cstddef>
#include <vector>

#include "resistor/estimate.hpp"
#include "resistor/graph.hpp"
#include "resistor/tridiagonal.hpp"

namespace resistor {

/// beta below this ends the recurrence: the Krylov space is invariant.
inline constexpr double kBreakdown = 1e-14;

struct LanczosRun {
  TridiagonalMatrix t;
  std::size_t k_effective = 0;
  /// sqrt(1/d_s + 1/d_t), the norm of D^{-1/2}(e_s - e_t)
  double v1_scale = 0.0;
  bool breakdown = false;
};

struct LanczosOptions {
  /// Full Gram-Schmidt against every previous vector. Stores V; diagnostics only.
  bool reorthogonalize = false;
};

struct LanczosResult {
  RDEstimate estimate;
  LanczosRun run;
};

/// Plain three-term Lanczos on the normalized adjacency from
/// v1 = D^{-1/2}(e_s - e_t) / ||.||, keeping three dense vectors.
/// Estimate: (1/d_s + 1/d_t) e1^T (I - T)^{-1} e1.
LanczosResult lanczos_rd(const Graph& g, Vertex s, Vertex t, std::size_t k,
                         const LanczosOptions& options = {});

/// Estimate that a run truncated to j steps would have produced, for
/// j = 1..k_effective. Prefix coefficients are identical to a shorter run.
std::vector<double> prefix_estimates(const LanczosRun& run);

/// sqrt(1/d_s + 1/d_t) D^{-1/2} V (I - T)^{-1} e1, assembled by replaying the
/// recurrence so V is never stored.
std::vector<double> lanczos_potential(const Graph& g, Vertex s, Vertex t, std::size_t k);

/// The Lanczos vectors v_1..v_k as columns (n x k, column-major), for
/// orthogonality diagnostics.
std::vector<std::vector<double>> lanczos_basis(const Graph& g, Vertex s, Vertex t, std::size_t k,
                                               const LanczosOptions& options = {});

/// ceil(sqrt(kappa) ln(kappa / eps)), at least 1.
std::size_t lanczos_steps(double kappa, double eps);

}  // namespace resistor
