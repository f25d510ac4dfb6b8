#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "resistor/errors.hpp"
#include "resistor/random.hpp"
#include "resistor/spectral.hpp"
#include "support.hpp"

using namespace resistor;

TEST_SUITE("spectral") {

TEST_CASE("small closed forms") {
  const SpectralEstimate k4 = estimate_spectrum(complete_graph(4));
  CHECK(k4.converged);
  CHECK(std::abs(k4.mu2 - 4.0 / 3.0) <= 1e-6);
  CHECK(std::abs(k4.kappa - 1.5) <= 1e-6);
  CHECK(std::abs(k4.lambda_min_a + 1.0 / 3.0) <= 1e-6);
  const SpectralEstimate p3 = estimate_spectrum(path_graph(3));
  CHECK(std::abs(p3.mu2 - 1.0) <= 1e-6);
  CHECK(std::abs(p3.kappa - 2.0) <= 1e-6);
  CHECK(std::abs(p3.lambda_min_a + 1.0) <= 1e-6);

  CHECK(dense_spectrum(complete_graph(4)).kappa == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(dense_spectrum(path_graph(3)).kappa == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("agrees with the dense oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 10 + seed * 4;
    const Graph g = testing::random_connected(n, 2 * n, seed, seed % 2 == 1);
    const double tol = 1e-9;
    const SpectralEstimate est = estimate_spectrum(g, tol);
    const DenseSpectrum ref = dense_spectrum(g);
    CHECK(est.converged);
    // the Rayleigh-quotient stop controls the quotient, which is what kappa uses
    CHECK(std::abs(est.lambda2_a - ref.lambda2_a) <= 1e-6);
    CHECK(std::abs(est.lambda_min_a - ref.lambda_min_a) <= 1e-6);
    CHECK(std::abs(est.kappa - ref.kappa) / ref.kappa <= 1e-5);
    CHECK(est.kappa >= 1.0);
    CHECK(est.lambda_min_a <= est.lambda2_a);

    double c = 0.0;
    double nrm = 0.0;
    for (Vertex u = 0; u < g.node_count(); ++u) {
      c += std::sqrt(g.degree(u)) * est.lambda2_vector[u];
      nrm += g.degree(u);
    }
    CHECK(std::abs(c) / std::sqrt(nrm) <= 1e-8);
  }
}

TEST_CASE("shifted and direct iterations agree when the direct one is well posed") {
  int compared = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    // ring lattice plus a few chords: lambda_2 near 1, lambda_min near -0.5
    std::vector<Edge> edges;
    const std::size_t n = 60;
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t d = 1; d <= 2; ++d) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>((u + d) % n), 1.0});
    }
    Rng rng(seed);
    for (int c = 0; c < 3; ++c) {
      const auto a = static_cast<Vertex>(rng.below(n));
      const auto b = static_cast<Vertex>((a + 5 + rng.below(n - 10)) % n);
      edges.push_back({a, b, 1.0});
    }
    const Graph g = Graph::from_edges(n, edges, true);
    const DenseSpectrum ref = dense_spectrum(g);
    if (ref.lambda2_a <= std::abs(ref.lambda_min_a) * 1.05) continue;
    const PowerResult direct = deflated_power_direct(g, 1e-12);
    if (!direct.converged) continue;
    const SpectralEstimate shifted = estimate_spectrum(g, 1e-12);
    CHECK(std::abs(direct.value - shifted.lambda2_a) <= 1e-7);
    ++compared;
  }
  CHECK(compared > 0);
}

TEST_CASE("bad inputs") {
  std::vector<Edge> split{{0, 1, 1.0}, {2, 3, 1.0}};
  CHECK_THROWS_AS(estimate_spectrum(Graph::from_edges(4, split)), DomainError);
  const SpectralEstimate capped = estimate_spectrum(path_graph(200), 1e-15, 5);
  CHECK_FALSE(capped.converged);
  CHECK_THROWS_AS(dense_spectrum(path_graph(50), 10), DomainError);
}

}  // TEST_SUITE
