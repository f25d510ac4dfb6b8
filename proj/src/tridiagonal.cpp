#include "resistor/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "resistor/errors.hpp"

namespace resistor {

void TridiagonalMatrix::validate() const {
  if (alpha.empty() ? !beta.empty() : beta.size() + 1 != alpha.size()) {
    throw DimensionError("tridiagonal matrix needs len(beta) == len(alpha) - 1");
  }
}

std::vector<double> TridiagonalMatrix::multiply(std::span<const double> x) const {
  validate();
  if (x.size() != size()) throw DimensionError("tridiagonal multiply: size mismatch");
  const std::size_t k = size();
  std::vector<double> y(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    y[i] = alpha[i] * x[i];
    if (i > 0) y[i] += beta[i - 1] * x[i - 1];
    if (i + 1 < k) y[i] += beta[i] * x[i + 1];
  }
  return y;
}

TridiagonalMatrix TridiagonalMatrix::leading(std::size_t j) const {
  validate();
  j = std::min(j, size());
  TridiagonalMatrix out;
  out.alpha.assign(alpha.begin(), alpha.begin() + static_cast<std::ptrdiff_t>(j));
  if (j > 0) out.beta.assign(beta.begin(), beta.begin() + static_cast<std::ptrdiff_t>(j - 1));
  return out;
}

std::vector<double> tridiag_solve_e1(const TridiagonalMatrix& t) {
  t.validate();
  const std::size_t k = t.size();
  if (k == 0) throw DimensionError("empty tridiagonal system");
  // I - T has diagonal 1 - alpha and off-diagonal -beta.
  std::vector<double> pivot(k);
  std::vector<double> lower(k, 0.0);
  for (std::size_t i = 0; i < k; ++i) {
    double d = 1.0 - t.alpha[i];
    if (i > 0) {
      lower[i] = -t.beta[i - 1] / pivot[i - 1];
      d -= lower[i] * -t.beta[i - 1];
    }
    if (!(std::abs(d) >= kSingularPivot)) {
      throw SingularSystemError("I - T is singular (pivot " + std::to_string(d) + " at row " +
                                std::to_string(i) + "); the spectrum of T left [lambda_min(A), lambda_2(A)]");
    }
    pivot[i] = d;
  }
  std::vector<double> x(k, 0.0);
  // L z = e1
  x[0] = 1.0;
  for (std::size_t i = 1; i < k; ++i) x[i] = -lower[i] * x[i - 1];
  for (std::size_t i = 0; i < k; ++i) x[i] /= pivot[i];
  for (std::size_t i = k - 1; i-- > 0;) x[i] -= lower[i + 1] * x[i + 1];
  return x;
}

std::size_t sturm_count(const TridiagonalMatrix& t, double x) {
  std::size_t count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : t.beta[i - 1] * t.beta[i - 1];
    q = t.alpha[i] - x - (i == 0 ? 0.0 : b2 / q);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::abs(x) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

EigenRange tridiag_eigen_range(const TridiagonalMatrix& t, double tol) {
  t.validate();
  const std::size_t k = t.size();
  if (k == 0) throw DimensionError("empty tridiagonal matrix");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < k; ++i) {
    double radius = 0.0;
    if (i > 0) radius += std::abs(t.beta[i - 1]);
    if (i + 1 < k) radius += std::abs(t.beta[i]);
    lo = std::min(lo, t.alpha[i] - radius);
    hi = std::max(hi, t.alpha[i] + radius);
  }
  lo -= tol;
  hi += tol;
  // index-th smallest eigenvalue: least x with sturm_count(x) > index
  auto bisect = [&](std::size_t index) {
    double a = lo;
    double b = hi;
    while (b - a > tol) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (sturm_count(t, mid) > index) {
        b = mid;
      } else {
        a = mid;
      }
    }
    return 0.5 * (a + b);
  };
  return {bisect(0), bisect(k - 1)};
}

}  // namespace resistor
