#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace resistor {

/// Symmetric tridiagonal k x k matrix: diagonal alpha[0..k), off-diagonal
/// beta[0..k-1) where beta[i] couples rows i and i+1.
struct TridiagonalMatrix {
  std::vector<double> alpha;
  std::vector<double> beta;

  std::size_t size() const { return alpha.size(); }
  /// Throws DimensionError unless beta.size() == alpha.size() - 1.
  void validate() const;
  std::vector<double> multiply(std::span<const double> x) const;
  /// Leading j x j block.
  TridiagonalMatrix leading(std::size_t j) const;
};

/// Pivots of I - T below this magnitude are reported as singular.
inline constexpr double kSingularPivot = 1e-14;

/// Solves (I - T) x = e1 by LDL^T elimination in O(k).
/// Throws SingularSystemError on a pivot below kSingularPivot.
std::vector<double> tridiag_solve_e1(const TridiagonalMatrix& t);

struct EigenRange {
  double min;
  double max;
};

/// Number of eigenvalues of t strictly below x (Sturm sequence count).
std::size_t sturm_count(const TridiagonalMatrix& t, double x);

/// Extremal eigenvalues by Sturm bisection to absolute tolerance `tol`.
EigenRange tridiag_eigen_range(const TridiagonalMatrix& t, double tol = 1e-12);

}  // namespace resistor
