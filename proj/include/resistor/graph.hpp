#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "resistor/random.hpp"

namespace resistor {

using Vertex = std::uint32_t;
using ExternalId = std::uint64_t;

struct Edge {
  Vertex u;
  Vertex v;
  double weight = 1.0;
};

/// Immutable undirected graph in CSR form. Every undirected edge is stored as
/// two arcs with identical weight; neighbor slices are sorted and free of
/// duplicates and self-loops. Instances produced by the loaders and
/// generators are always connected.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list over vertices 0..n-1. Self-loops are dropped and
  /// parallel edges merged (weights summed when `sum_duplicates`, otherwise
  /// the first weight wins). Does not restrict to a connected component.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, bool sum_duplicates = true);

  /// Same as from_edges but keeps only the largest connected component and
  /// relabels it densely, preserving the relative order of vertex ids.
  /// `external_ids[i]` names vertex i of the input; it is carried through.
  static Graph largest_component(std::size_t n, std::span<const Edge> edges,
                                 std::span<const ExternalId> external_ids = {},
                                 bool sum_duplicates = true);

  std::size_t node_count() const { return degrees_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  std::size_t arc_count() const { return neighbors_.size(); }

  double degree(Vertex u) const;
  double inv_sqrt_degree(Vertex u) const { return inv_sqrt_degrees_[u]; }
  std::size_t unweighted_degree(Vertex u) const;

  std::span<const Vertex> neighbors(Vertex u) const;
  std::span<const double> weights(Vertex u) const;
  std::size_t arc_begin(Vertex u) const { return offsets_[u]; }
  std::size_t arc_end(Vertex u) const { return offsets_[u + 1]; }

  /// (neighbor, weight) pairs of u, in ascending neighbor order.
  std::vector<std::pair<Vertex, double>> neighbor_slice(Vertex u) const;

  /// Weight of edge {u, v}, or 0 when absent. O(log d_u).
  double edge_weight(Vertex u, Vertex v) const;

  /// True when any edge weight differs from 1.
  bool is_weighted() const { return weighted_; }

  const std::vector<std::uint64_t>& offsets() const { return offsets_; }
  const std::vector<Vertex>& neighbor_array() const { return neighbors_; }
  const std::vector<double>& weight_array() const { return weights_; }
  const std::vector<double>& weighted_degrees() const { return degrees_; }
  const std::vector<double>& inv_sqrt_degrees() const { return inv_sqrt_degrees_; }

  /// Original id of each internal vertex (identity for generated graphs).
  const std::vector<ExternalId>& external_ids() const { return external_ids_; }
  /// Internal id of an external id; throws IndexError when unknown.
  Vertex internal_id(ExternalId id) const;

  /// Canonical undirected edges (u < v) in CSR order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex u) const;

  bool operator==(const Graph& other) const;

 private:
  friend Graph read_binary(std::istream& in);

  void finalize();

  std::vector<std::uint64_t> offsets_{0};
  std::vector<Vertex> neighbors_;
  std::vector<double> weights_;
  std::vector<double> degrees_;
  std::vector<double> inv_sqrt_degrees_;
  std::vector<ExternalId> external_ids_;
  bool weighted_ = false;
};

/// Reads whitespace-separated `u v [w]` lines; `#` and `%` lines are comments.
/// With `weighted` false any third column is ignored and duplicates collapse
/// to a unit edge; with `weighted` true duplicate weights are summed.
/// Returns the largest connected component relabeled to 0..n-1.
Graph load_edge_list(std::istream& in, bool weighted = false);
Graph load_edge_list_file(const std::string& path, bool weighted = false);

/// Writes one `u v [w]` line per undirected edge using external ids.
void write_edge_list(std::ostream& out, const Graph& g, bool with_weights);

/// Binary cache: "RDG1", u64 n, u64 m, u64 offsets[n+1], u32 neighbors[2m],
/// f64 weights[2m], u64 external_ids[n]; all little-endian.
void write_binary(std::ostream& out, const Graph& g);
Graph read_binary(std::istream& in);

/// Loads `.rdg` files as binary cache, everything else as an edge list.
Graph load_graph(const std::string& path, bool weighted = false);

/// Uniformly random vertex.
Vertex jump(const Graph& g, Rng& rng);

/// Reweights each edge by the number of triangles containing it (1 when it
/// lies in none). Requires an unweighted graph.
Graph triangle_weight(const Graph& g);

/// G(n, m): m distinct uniform edges, then largest component.
Graph generate_er(std::size_t n, std::size_t m_target, std::uint64_t seed);

/// Barabasi-Albert preferential attachment from a clique on attach+1
/// vertices; each later vertex links to `attach` distinct existing ones.
Graph generate_ba(std::size_t n, std::size_t attach, std::uint64_t seed);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Hop distances from `source`; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

}  // namespace resistor
