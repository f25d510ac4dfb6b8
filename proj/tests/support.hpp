#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "resistor/graph.hpp"
#include "resistor/random.hpp"

namespace resistor::testing {

/// Edges 1-2, 1-3, 1-4, 2-3; external ids 1..4 map to 0..3.
inline Graph toy_graph() {
  std::istringstream in("1 2\n1 3\n1 4\n2 3\n");
  return load_edge_list(in);
}

inline Graph single_edge() { return path_graph(2); }

/// Connected graph: a random spanning tree plus `extra` random edges.
inline Graph random_connected(std::size_t n, std::size_t extra, std::uint64_t seed, bool weighted = false) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    const auto u = static_cast<Vertex>(rng.below(v));
    edges.push_back({u, v, weighted ? 0.5 + 2.0 * rng.uniform() : 1.0});
  }
  for (std::size_t i = 0; i < extra; ++i) {
    const auto u = static_cast<Vertex>(rng.below(n));
    const auto v = static_cast<Vertex>(rng.below(n));
    if (u != v) edges.push_back({u, v, weighted ? 0.5 + 2.0 * rng.uniform() : 1.0});
  }
  return Graph::from_edges(n, edges, false);
}

inline std::vector<double> dense_vector(std::size_t n, Rng& rng) {
  std::vector<double> v(n);
  for (double& x : v) x = rng.uniform() - 0.5;
  return v;
}

}  // namespace resistor::testing
