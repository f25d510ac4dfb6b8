#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "resistor/graph.hpp"

namespace resistor {

/// Signed current on each undirected edge, oriented from the smaller to the
/// larger endpoint: flow[e] = w_e (phi(u) - phi(v)) for edges[e] = {u < v}.
struct FlowMap {
  std::vector<Edge> edges;
  std::vector<double> flow;
  /// Canonical edge index of every CSR arc.
  std::vector<std::size_t> arc_edge;

  /// Flow from u toward v along the arc at position `arc` (u's slice).
  double directed(const Graph& g, Vertex u, std::size_t arc) const;
};

FlowMap flow_from_potential(const Graph& g, std::span<const double> phi);

/// Potential from the Lanczos recurrence with k steps, then edge currents.
FlowMap electric_flow(const Graph& g, Vertex s, Vertex t, std::size_t k);

/// Net current leaving each vertex. For the exact flow this is +1 at s,
/// -1 at t and 0 elsewhere.
std::vector<double> net_outflow(const Graph& g, const FlowMap& flow);

struct Route {
  std::vector<Vertex> vertices;
  /// Hops on unweighted graphs, sum of 1/w otherwise.
  double length = 0.0;
  double bottleneck = 0.0;
};

/// Flows at or below this are treated as absent.
inline constexpr double kFlowFloor = 1e-12;

/// Path from s to t over arcs carrying positive flow in the travel direction,
/// maximizing the smallest such flow. None when t is unreachable.
std::optional<Route> max_bottleneck_path(const Graph& g, const FlowMap& flow, Vertex s, Vertex t);

struct RouteSet {
  std::vector<Route> routes;
  std::size_t extracted = 0;
  /// Fewer than l routes were found.
  bool short_of_target = false;
  /// Sum of bottlenecks taken out of the flow.
  double removed = 0.0;
};

/// Repeats widest-path extraction up to 2l times, subtracting each path's
/// bottleneck along it, and keeps the l cheapest routes (stable on ties).
RouteSet extract_routes(const Graph& g, FlowMap flow, Vertex s, Vertex t, std::size_t l);
RouteSet extract_routes(const Graph& g, Vertex s, Vertex t, std::size_t k, std::size_t l);

/// Cost used for route length: hops, or 1/w per edge on weighted graphs.
double edge_cost(const Graph& g, double weight);
double route_length(const Graph& g, std::span<const Vertex> path);
/// Shortest s-t distance under edge_cost.
double shortest_path_length(const Graph& g, Vertex s, Vertex t);

struct RouteMetrics {
  double stretch = 0.0;
  double diversity = 0.0;
  double mean_jaccard = 0.0;
  double robustness = 0.0;
  double shortest = 0.0;
};

RouteMetrics route_metrics(const Graph& g, std::span<const Route> routes, Vertex s, Vertex t, double p_delete,
                           std::size_t trials, std::uint64_t seed, unsigned threads = 1);

}  // namespace resistor
