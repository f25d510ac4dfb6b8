#include "resistor/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "resistor/errors.hpp"

namespace resistor {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n), size(n, 1) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
  std::vector<std::size_t> parent;
  std::vector<std::size_t> size;
};

void validate_weight(double w) {
  if (!(w > 0.0) || !std::isfinite(w)) {
    throw DomainError("edge weight must be positive and finite, got " + std::to_string(w));
  }
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, bool sum_duplicates) {
  if (n > std::numeric_limits<Vertex>::max()) throw DomainError("too many vertices");
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw IndexError("edge endpoint out of range");
    validate_weight(e.weight);
    if (e.u == e.v) continue;
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v), e.weight});
  }
  std::stable_sort(canon.begin(), canon.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  std::vector<Edge> merged;
  merged.reserve(canon.size());
  for (const Edge& e : canon) {
    if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
      if (sum_duplicates) merged.back().weight += e.weight;
      continue;
    }
    merged.push_back(e);
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : merged) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * merged.size());
  g.weights_.resize(2 * merged.size());
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted (u, v) with u < v: filling arcs in this order leaves every slice
  // sorted, since a vertex's smaller neighbors arrive (as v) before its
  // larger ones (as u).
  for (const Edge& e : merged) {
    g.neighbors_[cursor[e.v]] = e.u;
    g.weights_[cursor[e.v]++] = e.weight;
  }
  for (const Edge& e : merged) {
    g.neighbors_[cursor[e.u]] = e.v;
    g.weights_[cursor[e.u]++] = e.weight;
  }
  g.external_ids_.resize(n);
  std::iota(g.external_ids_.begin(), g.external_ids_.end(), ExternalId{0});
  g.finalize();
  return g;
}

Graph Graph::largest_component(std::size_t n, std::span<const Edge> edges,
                               std::span<const ExternalId> external_ids, bool sum_duplicates) {
  DisjointSets sets(n);
  bool any_edge = false;
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw IndexError("edge endpoint out of range");
    if (e.u == e.v) continue;
    sets.unite(e.u, e.v);
    any_edge = true;
  }
  if (!any_edge) throw EmptyGraphError("graph has no edges after removing self-loops");

  std::size_t best_root = 0;
  std::size_t best_size = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t r = sets.find(v);
    if (sets.size[r] > best_size) {
      best_size = sets.size[r];
      best_root = r;
    }
  }
  constexpr Vertex kDropped = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> relabel(n, kDropped);
  std::vector<ExternalId> kept_ids;
  kept_ids.reserve(best_size);
  for (std::size_t v = 0; v < n; ++v) {
    if (sets.find(v) != best_root) continue;
    relabel[v] = static_cast<Vertex>(kept_ids.size());
    kept_ids.push_back(external_ids.empty() ? v : external_ids[v]);
  }
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (relabel[e.u] == kDropped) continue;
    kept.push_back({relabel[e.u], relabel[e.v], e.weight});
  }
  Graph g = from_edges(kept_ids.size(), kept, sum_duplicates);
  g.external_ids_ = std::move(kept_ids);
  return g;
}

void Graph::finalize() {
  const std::size_t n = offsets_.size() - 1;
  degrees_.assign(n, 0.0);
  inv_sqrt_degrees_.assign(n, 0.0);
  weighted_ = false;
  for (std::size_t u = 0; u < n; ++u) {
    double d = 0.0;
    for (std::size_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
      d += weights_[a];
      if (weights_[a] != 1.0) weighted_ = true;
    }
    degrees_[u] = d;
    inv_sqrt_degrees_[u] = d > 0.0 ? 1.0 / std::sqrt(d) : 0.0;
  }
}

void Graph::check_vertex(Vertex u) const {
  if (u >= node_count()) {
    throw IndexError("vertex " + std::to_string(u) + " out of range (n = " +
                     std::to_string(node_count()) + ")");
  }
}

double Graph::degree(Vertex u) const {
  check_vertex(u);
  return degrees_[u];
}

std::size_t Graph::unweighted_degree(Vertex u) const {
  check_vertex(u);
  return offsets_[u + 1] - offsets_[u];
}

std::span<const Vertex> Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return {neighbors_.data() + offsets_[u], neighbors_.data() + offsets_[u + 1]};
}

std::span<const double> Graph::weights(Vertex u) const {
  check_vertex(u);
  return {weights_.data() + offsets_[u], weights_.data() + offsets_[u + 1]};
}

std::vector<std::pair<Vertex, double>> Graph::neighbor_slice(Vertex u) const {
  check_vertex(u);
  std::vector<std::pair<Vertex, double>> out;
  out.reserve(offsets_[u + 1] - offsets_[u]);
  for (std::size_t a = offsets_[u]; a < offsets_[u + 1]; ++a) out.emplace_back(neighbors_[a], weights_[a]);
  return out;
}

double Graph::edge_weight(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return 0.0;
  return weights_[offsets_[u] + static_cast<std::size_t>(it - nb.begin())];
}

Vertex Graph::internal_id(ExternalId id) const {
  // external ids are strictly increasing for loaded graphs, identity otherwise
  const auto it = std::lower_bound(external_ids_.begin(), external_ids_.end(), id);
  if (it == external_ids_.end() || *it != id) {
    throw IndexError("vertex id " + std::to_string(id) + " is not in the graph");
  }
  return static_cast<Vertex>(it - external_ids_.begin());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < node_count(); ++u) {
    for (std::size_t a = offsets_[u]; a < offsets_[u + 1]; ++a) {
      if (neighbors_[a] > u) out.push_back({u, neighbors_[a], weights_[a]});
    }
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  return offsets_ == other.offsets_ && neighbors_ == other.neighbors_ &&
         weights_ == other.weights_ && external_ids_ == other.external_ids_;
}

Vertex jump(const Graph& g, Rng& rng) {
  return static_cast<Vertex>(rng.below(g.node_count()));
}

Graph triangle_weight(const Graph& g) {
  if (g.is_weighted()) throw UnsupportedInputError("triangle weighting expects an unweighted graph");
  std::vector<Edge> reweighted = g.edges();
  for (Edge& e : reweighted) {
    const auto a = g.neighbors(e.u);
    const auto b = g.neighbors(e.v);
    std::size_t common = 0;
    for (std::size_t i = 0, j = 0; i < a.size() && j < b.size();) {
      if (a[i] < b[j]) {
        ++i;
      } else if (b[j] < a[i]) {
        ++j;
      } else {
        ++common;
        ++i;
        ++j;
      }
    }
    e.weight = common == 0 ? 1.0 : static_cast<double>(common);
  }
  Graph out = Graph::largest_component(g.node_count(), reweighted, g.external_ids());
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<std::size_t> dist(g.node_count(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex x : g.neighbors(u)) {
      if (dist[x] != std::numeric_limits<std::size_t>::max()) continue;
      dist[x] = dist[u] + 1;
      frontier.push(x);
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

}  // namespace resistor
