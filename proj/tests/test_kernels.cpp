#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "resistor/errors.hpp"
#include "resistor/kernels.hpp"
#include "resistor/sparse_vector.hpp"
#include "resistor/tridiagonal.hpp"
#include "support.hpp"

using namespace resistor;
using resistor::testing::toy_graph;

namespace {

Eigen::MatrixXd dense_walk(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.node_count());
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : g.edges()) {
    p(e.v, e.u) = e.weight / g.degree(e.u);
    p(e.u, e.v) = e.weight / g.degree(e.v);
  }
  return p;
}

Eigen::MatrixXd dense_tridiagonal(const TridiagonalMatrix& t) {
  const auto k = static_cast<Eigen::Index>(t.size());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) m(i, i) = t.alpha[i];
  for (Eigen::Index i = 0; i + 1 < k; ++i) m(i, i + 1) = m(i + 1, i) = t.beta[i];
  return m;
}

TridiagonalMatrix random_tridiagonal(std::size_t k, Rng& rng, double radius) {
  // scale a random tridiagonal so its spectrum lies in [-radius, radius]
  TridiagonalMatrix t;
  for (std::size_t i = 0; i < k; ++i) t.alpha.push_back(rng.uniform() - 0.5);
  for (std::size_t i = 0; i + 1 < k; ++i) t.beta.push_back(0.1 + rng.uniform());
  const EigenRange r = tridiag_eigen_range(t);
  const double s = radius / std::max(std::abs(r.min), std::abs(r.max));
  for (double& a : t.alpha) a *= s;
  for (double& b : t.beta) b *= s;
  return t;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("normalized adjacency examples") {
  const Graph e = testing::single_edge();
  const auto swapped = apply_normalized_adjacency(e, std::vector<double>{1.0, 0.0});
  CHECK(swapped == std::vector<double>{0.0, 1.0});

  // frozen from tests/oracle/frozen.json
  const Graph toy = toy_graph();
  const auto av = apply_normalized_adjacency(toy, std::vector<double>{0.5, 0.0, 0.0, std::sqrt(3.0) / 2.0});
  const double expect[] = {0.5, 0.20412414523193154, 0.20412414523193154, 0.2886751345948129};
  for (int i = 0; i < 4; ++i) CHECK(av[i] == doctest::Approx(expect[i]).epsilon(1e-14));
  CHECK(av[1] == doctest::Approx(1.0 / (2.0 * std::sqrt(6.0))).epsilon(1e-14));
  CHECK(av[3] == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0))).epsilon(1e-14));

  const auto ad = apply_normalized_adjacency(toy, std::vector<double>{1.0, 0.0, 0.0, -1.0});
  const double expect2[] = {-0.5773502691896258, 0.4082482904638631, 0.4082482904638631, 0.5773502691896258};
  for (int i = 0; i < 4; ++i) CHECK(ad[i] == doctest::Approx(expect2[i]).epsilon(1e-14));

  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = testing::random_connected(25, 30, seed, true);
    std::vector<double> top(g.node_count());
    for (Vertex u = 0; u < g.node_count(); ++u) top[u] = std::sqrt(g.degree(u));
    const auto out = apply_normalized_adjacency(g, top);
    for (Vertex u = 0; u < g.node_count(); ++u) CHECK(std::abs(out[u] - top[u]) <= 1e-12);
  }
}

TEST_CASE("lazy walk examples") {
  const auto e = apply_lazy_walk(testing::single_edge(), std::vector<double>{1.0, 0.0});
  CHECK(e == std::vector<double>{0.5, 0.5});
  const auto p = apply_lazy_walk(path_graph(3), std::vector<double>{0.0, 1.0, 0.0});
  CHECK(p == std::vector<double>{0.25, 0.5, 0.25});

  const Graph toy = toy_graph();
  const Eigen::MatrixXd lazy = 0.5 * (Eigen::MatrixXd::Identity(4, 4) + dense_walk(toy));
  const Eigen::Vector4d x(1.0, 0.0, 0.0, -1.0);
  const Eigen::Vector4d ref = lazy * x;
  const auto out = apply_lazy_walk(toy, std::vector<double>{1.0, 0.0, 0.0, -1.0});
  for (int i = 0; i < 4; ++i) CHECK(out[i] == doctest::Approx(ref(i)).epsilon(1e-15));
}

TEST_CASE("dimension mismatch") {
  const Graph g = path_graph(3);
  CHECK_THROWS_AS(apply_normalized_adjacency(g, std::vector<double>{1.0, 2.0}), DimensionError);
  CHECK_THROWS_AS(apply_lazy_walk(g, std::vector<double>(4, 0.0)), DimensionError);
}

TEST_CASE("adjacency is self-adjoint and contractive") {
  Rng rng(5);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = testing::random_connected(30, 50, seed, seed % 2 == 0);
    const auto v = testing::dense_vector(g.node_count(), rng);
    const auto w = testing::dense_vector(g.node_count(), rng);
    const auto av = apply_normalized_adjacency(g, v);
    const auto aw = apply_normalized_adjacency(g, w);
    const double lhs = dot(av, w);
    const double rhs = dot(v, aw);
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));
    CHECK(norm2(av) <= norm2(v) * (1.0 + 1e-12));
  }
}

TEST_CASE("tridiagonal solve") {
  TridiagonalMatrix one{{0.5}, {}};
  const auto x = tridiag_solve_e1(one);
  REQUIRE(x.size() == 1);
  CHECK(x[0] == doctest::Approx(2.0));

  // the worked example's coefficients: the solve itself is well defined
  TridiagonalMatrix ex{{0.5, 0.0281}, {1.0 / (2.0 * std::sqrt(3.0))}};
  const auto y = tridiag_solve_e1(ex);
  const double det = (1 - 0.5) * (1 - 0.0281) - 1.0 / 12.0;
  CHECK(y[0] == doctest::Approx((1 - 0.0281) / det));
  CHECK(y[1] == doctest::Approx(1.0 / (2.0 * std::sqrt(3.0)) / det));
  // (1/3 + 1) * (y_1 + <v1, v2> y_2) with orthogonal v1, v2
  CHECK((1.0 / 3.0 + 1.0) * y[0] == doctest::Approx(3.218).epsilon(0.002));

  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng.below(12);
    const TridiagonalMatrix t = random_tridiagonal(k, rng, 0.9);
    const auto sol = tridiag_solve_e1(t);
    // multiply back: (I - T) x = e1
    const auto tx = t.multiply(sol);
    for (std::size_t i = 0; i < k; ++i) CHECK(std::abs(sol[i] - tx[i] - (i == 0 ? 1.0 : 0.0)) <= 1e-12);
    if (k == 8) {
      const Eigen::MatrixXd m = Eigen::MatrixXd::Identity(8, 8) - dense_tridiagonal(t);
      const Eigen::VectorXd ref = m.partialPivLu().solve(Eigen::VectorXd::Unit(8, 0));
      for (int i = 0; i < 8; ++i) CHECK(std::abs(ref(i) - sol[i]) <= 1e-9);
    }
  }

  TridiagonalMatrix singular{{1.0}, {}};
  CHECK_THROWS_AS(tridiag_solve_e1(singular), SingularSystemError);
  TridiagonalMatrix bad{{0.1, 0.2}, {}};
  CHECK_THROWS_AS(tridiag_solve_e1(bad), DimensionError);
}

TEST_CASE("tridiagonal eigen range") {
  const EigenRange one = tridiag_eigen_range({{0.3}, {}});
  CHECK(one.min == doctest::Approx(0.3).epsilon(1e-12));
  CHECK(one.max == doctest::Approx(0.3).epsilon(1e-12));
  const EigenRange two = tridiag_eigen_range({{0.0, 0.0}, {1.0}});
  CHECK(two.min == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(two.max == doctest::Approx(1.0).epsilon(1e-12));

  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    TridiagonalMatrix t;
    for (int i = 0; i < 12; ++i) t.alpha.push_back(2.0 * rng.uniform() - 1.0);
    for (int i = 0; i < 11; ++i) t.beta.push_back(2.0 * rng.uniform() - 1.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense_tridiagonal(t));
    const EigenRange r = tridiag_eigen_range(t);
    CHECK(std::abs(r.min - solver.eigenvalues()(0)) <= 1e-8);
    CHECK(std::abs(r.max - solver.eigenvalues()(11)) <= 1e-8);
    CHECK(sturm_count(t, r.max + 1e-6) == 12);
    CHECK(sturm_count(t, r.min - 1e-6) == 0);
  }
}

TEST_CASE("chebyshev recurrence") {
  for (double x = -1.0; x <= 1.0; x += 0.01) {
    for (std::size_t l = 0; l < 30; ++l) {
      CHECK(std::abs(chebyshev_t(l, x) - std::cos(static_cast<double>(l) * std::acos(x))) <= 1e-12);
    }
  }

  const Graph toy = toy_graph();
  const ChebyshevNorms c = chebyshev_walk_norms(toy, 0, 4);
  REQUIRE(c.weighted.size() == 5);
  CHECK(c.weighted[0] == doctest::Approx(std::sqrt(3.0)));
  CHECK(c.plain[0] == doctest::Approx(1.0));
  const Eigen::MatrixXd p = dense_walk(toy);
  const Eigen::MatrixXd t2 = 2.0 * p * p - Eigen::MatrixXd::Identity(4, 4);
  double ref = 0.0;
  for (int i = 0; i < 4; ++i) ref += std::sqrt(toy.degree(i)) * std::abs(t2(i, 0));
  CHECK(std::abs(c.weighted[2] - ref) <= 1e-12);
  CHECK(std::abs(c.weighted[2] - 1.5201593107716889) <= 1e-12);

  const ChebyshevNorms e = chebyshev_walk_norms(testing::single_edge(), 0, 6);
  for (double v : e.weighted) CHECK(v == doctest::Approx(1.0));
}

TEST_CASE("sparse vectors") {
  const SparseVector v = SparseVector::from_entries(6, {{4, 1.0}, {1, 2.0}, {4, -1.0}, {2, 0.0}, {1, 0.5}});
  REQUIRE(v.size() == 1);
  CHECK(v.at(1) == 2.5);
  CHECK(v.at(4) == 0.0);
  CHECK_FALSE(v.contains(4));
  CHECK_THROWS_AS(SparseVector::from_entries(2, {{3, 1.0}}), IndexError);

  const SparseVector a = SparseVector::from_dense(std::vector<double>{1, 0, -2, 0, 3});
  const SparseVector b = SparseVector::from_dense(std::vector<double>{0, 5, 1, 0, 1});
  CHECK(a.dot(b) == 1.0);
  CHECK(a.norm1() == 6.0);
  CHECK(a.norm2() == doctest::Approx(std::sqrt(14.0)));
  CHECK(a.minus_scaled(2.0, b).to_dense() == std::vector<double>{1, -10, -4, 0, 1});
  CHECK(a.minus_scaled(1.0, a).empty());
  CHECK(a.divided(2.0).to_dense() == std::vector<double>{0.5, 0, -1, 0, 1.5});

  SparseAccumulator acc(5);
  acc.add(3, 1.0);
  acc.add(0, 2.0);
  acc.add(3, -1.0);
  const SparseVector out = acc.extract();
  CHECK(out.size() == 1);
  CHECK(out.at(0) == 2.0);
  CHECK(acc.touched().empty());
  acc.add(2, 1.0);
  acc.clear();
  CHECK(acc.extract().empty());
}

}  // TEST_SUITE
