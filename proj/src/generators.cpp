#include <algorithm>
#include <unordered_set>

#include "resistor/errors.hpp"
#include "resistor/graph.hpp"

namespace resistor {

Graph generate_er(std::size_t n, std::size_t m_target, std::uint64_t seed) {
  if (n < 2) throw DomainError("ER graph needs n >= 2");
  const std::size_t max_edges = n * (n - 1) / 2;
  if (m_target > max_edges) {
    throw DomainError("ER graph cannot have " + std::to_string(m_target) + " edges on " +
                      std::to_string(n) + " vertices");
  }
  Rng rng(seed);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(2 * m_target);
  std::vector<Edge> edges;
  edges.reserve(m_target);
  while (edges.size() < m_target) {
    auto u = static_cast<Vertex>(rng.below(n));
    auto v = static_cast<Vertex>(rng.below(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert(static_cast<std::uint64_t>(u) * n + v).second) continue;
    edges.push_back({u, v, 1.0});
  }
  return Graph::largest_component(n, edges);
}

Graph generate_ba(std::size_t n, std::size_t attach, std::uint64_t seed) {
  if (attach < 1) throw DomainError("BA graph needs attach >= 1");
  if (n < attach + 1 || n < 2) throw DomainError("BA graph needs n > attach");
  Rng rng(seed);
  std::vector<Edge> edges;
  // one entry per arc endpoint, so uniform picks are degree-proportional
  std::vector<Vertex> endpoints;
  const std::size_t seed_size = attach + 1;
  for (Vertex u = 0; u < seed_size; ++u) {
    for (Vertex v = u + 1; v < seed_size; ++v) {
      edges.push_back({u, v, 1.0});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<Vertex> targets;
  for (auto u = static_cast<Vertex>(seed_size); u < n; ++u) {
    targets.clear();
    while (targets.size() < attach) {
      const Vertex pick = endpoints[rng.below(endpoints.size())];
      if (std::find(targets.begin(), targets.end(), pick) == targets.end()) targets.push_back(pick);
    }
    for (Vertex v : targets) {
      edges.push_back({v, u, 1.0});
      endpoints.push_back(v);
      endpoints.push_back(u);
    }
  }
  return Graph::largest_component(n, edges);
}

Graph path_graph(std::size_t n) {
  if (n < 2) throw DomainError("path graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, 1.0});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle graph needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n), 1.0});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  if (n < 2) throw DomainError("complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  }
  return Graph::from_edges(n, edges);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  if (rows * cols < 2) throw DomainError("grid graph needs at least two vertices");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), 1.0});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), 1.0});
    }
  }
  return Graph::from_edges(rows * cols, edges);
}

}  // namespace resistor
