#include <doctest.h>

#include <cmath>
#include <numeric>

#include "resistor/baselines.hpp"
#include "resistor/errors.hpp"
#include "resistor/spectral.hpp"
#include "support.hpp"

using namespace resistor;
using resistor::testing::toy_graph;

TEST_SUITE("baselines") {

TEST_CASE("exact oracle examples") {
  CHECK(exact_rd(testing::single_edge(), 0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(exact_rd(path_graph(3), 0, 2) == doctest::Approx(2.0).epsilon(1e-12));
  const Graph toy = toy_graph();
  CHECK(std::abs(exact_rd(toy, 0, 3) - 1.0) <= 1e-12);
  // edge 1-2 parallel to the two-hop 1-3-2
  CHECK(std::abs(exact_rd(toy, 0, 1) - 2.0 / 3.0) <= 1e-12);
  CHECK(exact_rd(toy, 2, 2) == 0.0);
  CHECK_THROWS_AS(exact_rd(toy, 0, 9), IndexError);
  CHECK_THROWS_AS(exact_rd(path_graph(10), 0, 9, 5), DomainError);
  std::vector<Edge> split{{0, 1, 1.0}, {2, 3, 1.0}};
  CHECK_THROWS_AS(LaplacianPseudoinverse(Graph::from_edges(4, split)), DomainError);
}

TEST_CASE("weighted resistors combine like conductances") {
  // two parallel 2-ohm paths collapse to 1 ohm; weights are conductances
  std::vector<Edge> e{{0, 1, 0.5}, {0, 1, 0.5}, {1, 2, 2.0}};
  const Graph g = Graph::from_edges(3, e);
  CHECK(exact_rd(g, 0, 1) == doctest::Approx(1.0));
  CHECK(exact_rd(g, 0, 2) == doctest::Approx(1.5));
}

TEST_CASE("exact RD is a metric") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = testing::random_connected(20, 20, seed, seed % 2 == 0);
    const LaplacianPseudoinverse lp(g);
    const auto n = static_cast<Vertex>(g.node_count());
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        CHECK(std::abs(lp.resistance(a, b) - lp.resistance(b, a)) <= 1e-12);
        if (a != b) CHECK(lp.resistance(a, b) > 0.0);
        for (Vertex c = 0; c < n; ++c) {
          CHECK(lp.resistance(a, c) <= lp.resistance(a, b) + lp.resistance(b, c) + 1e-10);
        }
      }
    }
  }
}

TEST_CASE("power method") {
  // the first term alone: r(s)/(2 d_s) - r(t)/(2 d_t) with r = e_s - e_t
  const RDEstimate e0 = power_method_rd(testing::single_edge(), 0, 1, 0);
  CHECK(e0.value == doctest::Approx(1.0));
  CHECK(e0.iterations == 0);

  const double eps = 1e-3;
  const std::size_t l = power_method_steps(2.0, eps);
  CHECK(l == static_cast<std::size_t>(std::ceil(4.0 * std::log(2000.0))));
  CHECK(std::abs(power_method_rd(path_graph(3), 0, 2, l).value - 2.0) <= eps);

  CHECK(std::abs(power_method_rd(toy_graph(), 0, 3, 20000).value - 1.0) <= 1e-9);
  CHECK(power_method_rd(toy_graph(), 1, 1, 10).value == 0.0);

  std::size_t seen = 0;
  const RDEstimate stopped = power_method_rd(toy_graph(), 0, 3, 100, [&](std::size_t i, double) {
    seen = i;
    return i < 5;
  });
  CHECK(seen == 5);
  CHECK(stopped.iterations == 5);
}

TEST_CASE("power method partial sums never decrease") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = testing::random_connected(15 + seed % 10, 10 + seed % 7, seed, seed % 3 == 0);
    const Vertex s = 0;
    const auto t = static_cast<Vertex>(g.node_count() - 1);
    double prev = -1.0;
    power_method_rd(g, s, t, 60, [&](std::size_t, double acc) {
      CHECK(acc - prev >= -1e-12);
      prev = acc;
      return true;
    });
    CHECK(power_method_rd(g, s, t, 40).value == power_method_rd(g, t, s, 40).value);
  }
}

TEST_CASE("power method meets its bound on ER(50)") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Graph g = generate_er(50, 200, seed);
    const double kappa = dense_spectrum(g).kappa;
    const LaplacianPseudoinverse lp(g);
    for (double eps : {1e-1, 1e-2, 1e-3}) {
      const std::size_t l = power_method_steps(kappa, eps);
      const auto t = static_cast<Vertex>(g.node_count() - 1);
      CHECK(std::abs(power_method_rd(g, 0, t, l).value - lp.resistance(0, t)) <= eps);
    }
  }
}

TEST_CASE("random walk estimator") {
  const Graph toy = toy_graph();
  // length-0 walks sit at their start
  const RDEstimate z = random_walk_rd(toy, 0, 3, 0, 10, 1);
  CHECK(z.value == doctest::Approx(1.0 / 6.0 + 1.0 / 2.0));

  const RDEstimate a = random_walk_rd(toy, 0, 3, 20, 500, 42, 1);
  const RDEstimate b = random_walk_rd(toy, 0, 3, 20, 500, 42, 3);
  CHECK(a.value == b.value);
  CHECK(a.touched_edges == b.touched_edges);

  std::istringstream in("0 1 2\n1 2 1\n");
  CHECK_THROWS_AS(random_walk_rd(load_edge_list(in, true), 0, 1, 3, 10, 1), UnsupportedInputError);
  CHECK_THROWS_AS(random_walk_rd(toy, 0, 1, 3, 0, 1), std::invalid_argument);
}

TEST_CASE("random walk is unbiased for the truncated series") {
  const Graph toy = toy_graph();
  const std::size_t l = 60;
  double mean = 0.0;
  const int seeds = 50;
  for (int seed = 0; seed < seeds; ++seed) mean += random_walk_rd(toy, 0, 3, l, 10000, seed).value;
  mean /= seeds;
  CHECK(std::abs(mean - power_method_rd(toy, 0, 3, l).value) <= 0.02);
  CHECK(std::abs(mean - 1.0) <= 0.02);
}

}  // TEST_SUITE
