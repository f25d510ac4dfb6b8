#include <doctest.h>

#include <cmath>

#include "resistor/baselines.hpp"
#include "resistor/errors.hpp"
#include "resistor/lanczos.hpp"
#include "resistor/spectral.hpp"
#include "support.hpp"

using namespace resistor;
using resistor::testing::toy_graph;

TEST_SUITE("lanczos") {

TEST_CASE("single edge breaks down at k = 1") {
  const LanczosResult r = lanczos_rd(testing::single_edge(), 0, 1, 5);
  CHECK(r.run.breakdown);
  CHECK(r.run.k_effective == 1);
  REQUIRE(r.run.t.alpha.size() == 1);
  CHECK(r.run.t.alpha[0] == doctest::Approx(-1.0));
  CHECK(r.estimate.value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("toy graph") {
  const Graph toy = toy_graph();
  const LanczosResult r1 = lanczos_rd(toy, 0, 3, 1);
  // v1 = [1/2, 0, 0, -sqrt(3)/2] with the definitional sign
  CHECK(r1.run.t.alpha[0] == doctest::Approx(-0.5).epsilon(1e-14));
  const LanczosResult r4 = lanczos_rd(toy, 0, 3, 4);
  CHECK(std::abs(r4.estimate.value - 1.0) <= 1e-10);
  CHECK(r4.run.k_effective <= 4);
  for (double b : r4.run.t.beta) CHECK(b > 0.0);
  CHECK(lanczos_rd(toy, 2, 2, 3).estimate.value == 0.0);
  CHECK_THROWS_AS(lanczos_rd(toy, 0, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS(lanczos_rd(toy, 0, 7, 2), IndexError);
}

TEST_CASE("full dimension reproduces the exact oracle") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t n = 5 + seed % 45;
    const Graph g = testing::random_connected(n, n / 2 + seed % 5, seed, seed % 4 == 1);
    Rng rng(seed);
    const auto s = static_cast<Vertex>(rng.below(n));
    auto t = static_cast<Vertex>(rng.below(n));
    if (s == t) t = (t + 1) % n;
    const LanczosResult r = lanczos_rd(g, s, t, n);
    CHECK(std::abs(r.estimate.value - exact_rd(g, s, t)) <= 1e-8);
  }
}

TEST_CASE("bound-sized k on ER(200)") {
  const Graph g = generate_er(200, 1200, 11);
  const double kappa = dense_spectrum(g).kappa;
  const double eps = 1e-4;
  const std::size_t k = lanczos_steps(kappa, eps);
  const auto t = static_cast<Vertex>(g.node_count() / 2);
  CHECK(std::abs(lanczos_rd(g, 0, t, k).estimate.value - exact_rd(g, 0, t)) <= eps);
}

TEST_CASE("error mostly shrinks with k") {
  int good = 0;
  int total = 0;
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = generate_er(120, 360, seed + 100);
    const auto t = static_cast<Vertex>(1 + seed % (g.node_count() - 1));
    const double exact = exact_rd(g, 0, t);
    const LanczosResult r = lanczos_rd(g, 0, t, 30);
    const auto prefix = prefix_estimates(r.run);
    for (std::size_t k = 1; k + 5 <= prefix.size(); k += 3) {
      const double e0 = std::abs(prefix[k - 1] - exact);
      const double e5 = std::abs(prefix[k + 4] - exact);
      good += e5 <= e0 + 1e-14;
      ++total;
    }
  }
  CHECK(good >= 0.9 * total);
}

TEST_CASE("prefix estimates match truncated runs") {
  const Graph g = generate_er(80, 300, 4);
  const LanczosResult full = lanczos_rd(g, 3, 40, 20);
  const auto prefix = prefix_estimates(full.run);
  for (std::size_t k = 1; k <= full.run.k_effective; ++k) {
    CHECK(prefix[k - 1] == doctest::Approx(lanczos_rd(g, 3, 40, k).estimate.value).epsilon(1e-13));
  }
}

TEST_CASE("basis stays orthonormal on small well-conditioned graphs") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = generate_er(60, 400, seed);
    const auto v = lanczos_basis(g, 0, 7, 15);
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = 0; j < v.size(); ++j) {
        double d = 0.0;
        for (std::size_t u = 0; u < v[i].size(); ++u) d += v[i][u] * v[j][u];
        CHECK(std::abs(d - (i == j ? 1.0 : 0.0)) <= 1e-6);
      }
    }
  }
  const Graph g = generate_er(60, 400, 9);
  const auto plain = lanczos_rd(g, 0, 7, 12);
  const auto ortho = lanczos_rd(g, 0, 7, 12, {.reorthogonalize = true});
  CHECK(plain.estimate.value == doctest::Approx(ortho.estimate.value).epsilon(1e-10));
}

TEST_CASE("potential") {
  const auto e = lanczos_potential(testing::single_edge(), 0, 1, 1);
  CHECK(std::abs(e[0] - e[1] - 1.0) <= 1e-12);
  const auto p = lanczos_potential(path_graph(3), 0, 2, 3);
  CHECK(std::abs(p[0] - p[1] - 1.0) <= 1e-8);
  CHECK(std::abs(p[1] - p[2] - 1.0) <= 1e-8);
  const auto toy = lanczos_potential(toy_graph(), 0, 3, 4);
  CHECK(std::abs(toy[0] - toy[3] - 1.0) <= 1e-9);

  // against the dense pseudoinverse, up to the additive constant
  const Graph g = testing::random_connected(30, 25, 8, true);
  const auto phi = lanczos_potential(g, 2, 17, 30);
  const auto ref = LaplacianPseudoinverse(g).potential(2, 17);
  for (Vertex u = 0; u < g.node_count(); ++u) {
    CHECK(std::abs((phi[u] - phi[17]) - (ref[u] - ref[17])) <= 1e-8);
  }
}

TEST_CASE("step counts") {
  CHECK(lanczos_steps(4.0, 1e-2) == static_cast<std::size_t>(std::ceil(2.0 * std::log(400.0))));
  CHECK(lanczos_steps(1.0, 2.0) == 1);
}

}  // TEST_SUITE
