#include "resistor/kernels.hpp"

#include <cmath>

#include "resistor/errors.hpp"

namespace resistor {

namespace {

void check_dims(const Graph& g, std::span<const double> v, std::span<double> out) {
  if (v.size() != g.node_count() || out.size() != g.node_count()) {
    throw DimensionError("vector length " + std::to_string(v.size()) + " does not match n = " +
                         std::to_string(g.node_count()));
  }
}

}  // namespace

void apply_normalized_adjacency(const Graph& g, std::span<const double> v, std::span<double> out) {
  check_dims(g, v, out);
  const auto& offsets = g.offsets();
  const auto& nbrs = g.neighbor_array();
  const auto& w = g.weight_array();
  const auto& isd = g.inv_sqrt_degrees();
  const std::size_t n = g.node_count();
  for (std::size_t u = 0; u < n; ++u) {
    double acc = 0.0;
    for (std::size_t a = offsets[u]; a < offsets[u + 1]; ++a) {
      const Vertex x = nbrs[a];
      acc += w[a] * isd[x] * v[x];
    }
    out[u] = acc * isd[u];
  }
}

std::vector<double> apply_normalized_adjacency(const Graph& g, std::span<const double> v) {
  std::vector<double> out(g.node_count());
  apply_normalized_adjacency(g, v, out);
  return out;
}

void apply_walk(const Graph& g, std::span<const double> v, std::span<double> out) {
  check_dims(g, v, out);
  const auto& offsets = g.offsets();
  const auto& nbrs = g.neighbor_array();
  const auto& w = g.weight_array();
  const auto& deg = g.weighted_degrees();
  const std::size_t n = g.node_count();
  for (std::size_t u = 0; u < n; ++u) {
    double acc = 0.0;
    for (std::size_t a = offsets[u]; a < offsets[u + 1]; ++a) {
      const Vertex x = nbrs[a];
      acc += w[a] * v[x] / deg[x];
    }
    out[u] = acc;
  }
}

void apply_lazy_walk(const Graph& g, std::span<const double> v, std::span<double> out) {
  apply_walk(g, v, out);
  for (std::size_t u = 0; u < v.size(); ++u) out[u] = 0.5 * v[u] + 0.5 * out[u];
}

std::vector<double> apply_lazy_walk(const Graph& g, std::span<const double> v) {
  std::vector<double> out(g.node_count());
  apply_lazy_walk(g, v, out);
  return out;
}

double chebyshev_t(std::size_t l, double x) {
  if (l == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (std::size_t i = 1; i < l; ++i) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

ChebyshevNorms chebyshev_walk_norms(const Graph& g, Vertex u, std::size_t k) {
  g.check_vertex(u);
  const std::size_t n = g.node_count();
  const auto& deg = g.weighted_degrees();
  ChebyshevNorms norms;
  auto record = [&](const std::vector<double>& x) {
    double weighted = 0.0;
    double plain = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      weighted += std::sqrt(deg[i]) * std::abs(x[i]);
      plain += std::abs(x[i]);
    }
    norms.weighted.push_back(weighted);
    norms.plain.push_back(plain);
  };

  std::vector<double> prev(n, 0.0);
  prev[u] = 1.0;
  record(prev);
  if (k == 0) return norms;
  std::vector<double> cur(n);
  apply_walk(g, prev, cur);
  record(cur);
  std::vector<double> next(n);
  for (std::size_t step = 1; step < k; ++step) {
    apply_walk(g, cur, next);
    for (std::size_t i = 0; i < n; ++i) next[i] = 2.0 * next[i] - prev[i];
    prev.swap(cur);
    cur.swap(next);
    record(cur);
  }
  return norms;
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(std::span<const double> a) { return std::sqrt(dot(a, a)); }

}  // namespace resistor
