#pragma once

#include <cstddef>
#include <vector>

#include "resistor/graph.hpp"

namespace resistor {

struct SpectralEstimate {
  double lambda2_a = 0.0;     // second-largest eigenvalue of A
  double lambda_min_a = 0.0;  // smallest eigenvalue of A
  double mu2 = 0.0;           // 1 - lambda2_a, smallest nonzero eigenvalue of I - A
  double kappa = 0.0;         // 2 / mu2
  std::size_t iterations = 0; // both iterations together
  double residual = 0.0;      // ||B x - rho x|| of the lambda_2 iteration
  bool converged = false;
  std::vector<double> lambda2_vector;
};

/// lambda_2(A) by power iteration on (I + A)/2 with D^{1/2} 1 deflated after
/// every product; lambda_min(A) by power iteration on (I - A)/2. Both stop
/// once successive Rayleigh quotients differ by less than `tol`.
SpectralEstimate estimate_spectrum(const Graph& g, double tol = 1e-9, std::size_t max_iter = 2'000'000);

struct PowerResult {
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Unshifted deflated iteration on A. Converges to lambda_2 only when
/// lambda_2 > |lambda_min|.
PowerResult deflated_power_direct(const Graph& g, double tol = 1e-9, std::size_t max_iter = 2'000'000);

struct DenseSpectrum {
  std::vector<double> eigenvalues;  // of A, ascending
  double lambda2_a = 0.0;
  double lambda_min_a = 0.0;
  double kappa = 0.0;
};

/// Dense eigensolve of A (oracle for small graphs). Throws DomainError above `cap`.
DenseSpectrum dense_spectrum(const Graph& g, std::size_t cap = 2000);

}  // namespace resistor
