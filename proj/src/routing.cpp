#include "resistor/routing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <thread>

#include "resistor/errors.hpp"
#include "resistor/lanczos.hpp"
#include "resistor/random.hpp"

namespace resistor {

double FlowMap::directed(const Graph& g, Vertex u, std::size_t arc) const {
  const Vertex v = g.neighbor_array()[arc];
  const double f = flow[arc_edge[arc]];
  return u < v ? f : -f;
}

FlowMap flow_from_potential(const Graph& g, std::span<const double> phi) {
  if (phi.size() != g.node_count()) throw DimensionError("potential length does not match the graph");
  FlowMap fm;
  fm.arc_edge.assign(g.arc_count(), 0);
  const auto& nbrs = g.neighbor_array();
  const auto& w = g.weight_array();
  for (Vertex u = 0; u < g.node_count(); ++u) {
    for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) {
      const Vertex v = nbrs[a];
      if (u < v) {
        fm.arc_edge[a] = fm.edges.size();
        fm.edges.push_back({u, v, w[a]});
        fm.flow.push_back(w[a] * (phi[u] - phi[v]));
      }
    }
  }
  // reverse arcs: look up the canonical index in the smaller endpoint's slice
  for (Vertex u = 0; u < g.node_count(); ++u) {
    for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) {
      const Vertex v = nbrs[a];
      if (u > v) {
        const auto nb = g.neighbors(v);
        const auto pos = static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), u) - nb.begin());
        fm.arc_edge[a] = fm.arc_edge[g.arc_begin(v) + pos];
      }
    }
  }
  return fm;
}

FlowMap electric_flow(const Graph& g, Vertex s, Vertex t, std::size_t k) {
  if (s == t) throw std::invalid_argument("electric flow needs s != t");
  return flow_from_potential(g, lanczos_potential(g, s, t, k));
}

std::vector<double> net_outflow(const Graph& g, const FlowMap& flow) {
  std::vector<double> out(g.node_count(), 0.0);
  for (std::size_t e = 0; e < flow.edges.size(); ++e) {
    out[flow.edges[e].u] += flow.flow[e];
    out[flow.edges[e].v] -= flow.flow[e];
  }
  return out;
}

double edge_cost(const Graph& g, double weight) { return g.is_weighted() ? 1.0 / weight : 1.0; }

double route_length(const Graph& g, std::span<const Vertex> path) {
  double len = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) len += edge_cost(g, g.edge_weight(path[i], path[i + 1]));
  return len;
}

double shortest_path_length(const Graph& g, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> dist(g.node_count(), inf);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[s] = 0.0;
  pq.push({0.0, s});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (u == t) return d;
    const auto nb = g.neighbors(u);
    const auto w = g.weights(u);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const double nd = d + edge_cost(g, w[i]);
      if (nd < dist[nb[i]]) {
        dist[nb[i]] = nd;
        pq.push({nd, nb[i]});
      }
    }
  }
  return inf;
}

std::optional<Route> max_bottleneck_path(const Graph& g, const FlowMap& flow, Vertex s, Vertex t) {
  g.check_vertex(s);
  g.check_vertex(t);
  if (s == t) return std::nullopt;
  const std::size_t n = g.node_count();
  constexpr Vertex none = std::numeric_limits<Vertex>::max();
  std::vector<double> width(n, 0.0);
  std::vector<Vertex> parent(n, none);
  std::vector<char> done(n, 0);
  // widest first, then smaller vertex id
  using Item = std::pair<double, Vertex>;
  auto cmp = [](const Item& a, const Item& b) { return a.first < b.first || (a.first == b.first && a.second > b.second); };
  std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
  width[s] = std::numeric_limits<double>::infinity();
  pq.push({width[s], s});
  const auto& nbrs = g.neighbor_array();
  while (!pq.empty()) {
    const auto [wu, u] = pq.top();
    pq.pop();
    if (done[u]) continue;
    done[u] = 1;
    if (u == t) break;
    for (std::size_t a = g.arc_begin(u); a < g.arc_end(u); ++a) {
      const double f = flow.directed(g, u, a);
      if (f <= kFlowFloor) continue;
      const Vertex v = nbrs[a];
      const double cand = std::min(wu, f);
      if (!done[v] && cand > width[v]) {
        width[v] = cand;
        parent[v] = u;
        pq.push({cand, v});
      }
    }
  }
  if (!done[t]) return std::nullopt;
  Route r;
  for (Vertex v = t; v != none; v = parent[v]) r.vertices.push_back(v);
  std::reverse(r.vertices.begin(), r.vertices.end());
  r.bottleneck = width[t];
  r.length = route_length(g, r.vertices);
  return r;
}

namespace {

std::size_t arc_between(const Graph& g, Vertex u, Vertex v) {
  const auto nb = g.neighbors(u);
  const auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) throw std::logic_error("route uses a missing edge");
  return g.arc_begin(u) + static_cast<std::size_t>(it - nb.begin());
}

}  // namespace

RouteSet extract_routes(const Graph& g, FlowMap flow, Vertex s, Vertex t, std::size_t l) {
  if (l == 0) throw std::invalid_argument("route extraction needs l >= 1");
  RouteSet out;
  std::vector<Route> found;
  for (std::size_t round = 0; round < 2 * l; ++round) {
    auto route = max_bottleneck_path(g, flow, s, t);
    if (!route) break;
    const double b = route->bottleneck;
    const auto& p = route->vertices;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      const std::size_t e = flow.arc_edge[arc_between(g, p[i], p[i + 1])];
      flow.flow[e] += p[i] < p[i + 1] ? -b : b;
    }
    out.removed += b;
    found.push_back(std::move(*route));
  }
  out.extracted = found.size();
  std::stable_sort(found.begin(), found.end(), [](const Route& a, const Route& b) { return a.length < b.length; });
  if (found.size() > l) found.resize(l);
  out.short_of_target = found.size() < l;
  out.routes = std::move(found);
  return out;
}

RouteSet extract_routes(const Graph& g, Vertex s, Vertex t, std::size_t k, std::size_t l) {
  return extract_routes(g, electric_flow(g, s, t, k), s, t, l);
}

RouteMetrics route_metrics(const Graph& g, std::span<const Route> routes, Vertex s, Vertex t, double p_delete,
                           std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (routes.empty()) throw std::invalid_argument("route metrics need at least one route");
  if (trials == 0) throw std::invalid_argument("route metrics need trials >= 1");
  if (!(p_delete >= 0.0 && p_delete <= 1.0)) throw DomainError("p_delete must lie in [0, 1]");
  RouteMetrics m;
  m.shortest = shortest_path_length(g, s, t);
  if (!std::isfinite(m.shortest)) throw DomainError("stretch is undefined: s and t are disconnected");

  double total = 0.0;
  for (const Route& r : routes) total += r.length;
  m.stretch = total / static_cast<double>(routes.size()) / m.shortest;

  // edge sets as sorted canonical edge keys
  std::vector<std::vector<std::uint64_t>> sets;
  for (const Route& r : routes) {
    std::vector<std::uint64_t> keys;
    for (std::size_t i = 0; i + 1 < r.vertices.size(); ++i) {
      const auto a = std::min(r.vertices[i], r.vertices[i + 1]);
      const auto b = std::max(r.vertices[i], r.vertices[i + 1]);
      keys.push_back((static_cast<std::uint64_t>(a) << 32) | b);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    sets.push_back(std::move(keys));
  }
  double jac = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<std::uint64_t> common;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(), sets[j].end(),
                            std::back_inserter(common));
      const double uni = static_cast<double>(sets[i].size() + sets[j].size() - common.size());
      jac += uni > 0.0 ? static_cast<double>(common.size()) / uni : 1.0;
      ++pairs;
    }
  }
  m.mean_jaccard = pairs ? jac / static_cast<double>(pairs) : 0.0;
  m.diversity = 1.0 - m.mean_jaccard;

  std::vector<std::uint64_t> all;
  for (const auto& s_ : sets) all.insert(all.end(), s_.begin(), s_.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::vector<std::vector<std::size_t>> route_idx;
  for (const auto& s_ : sets) {
    std::vector<std::size_t> idx;
    for (auto key : s_) idx.push_back(static_cast<std::size_t>(std::lower_bound(all.begin(), all.end(), key) - all.begin()));
    route_idx.push_back(std::move(idx));
  }

  threads = std::max(1u, threads);
  std::vector<std::size_t> survived(threads, 0);
  auto work = [&](unsigned worker) {
    std::vector<char> deleted(all.size());
    for (std::size_t trial = trials * worker / threads; trial < trials * (worker + 1) / threads; ++trial) {
      Rng rng = Rng::stream(seed, trial);
      for (auto& d : deleted) d = rng.uniform() < p_delete;
      for (const auto& idx : route_idx) {
        if (std::none_of(idx.begin(), idx.end(), [&](std::size_t e) { return deleted[e] != 0; })) {
          ++survived[worker];
          break;
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }
  std::size_t ok = 0;
  for (auto c : survived) ok += c;
  m.robustness = static_cast<double>(ok) / static_cast<double>(trials);
  return m;
}

}  // namespace resistor
