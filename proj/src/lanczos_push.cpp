#include "resistor/lanczos_push.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

#include "resistor/errors.hpp"
#include "resistor/kernels.hpp"
#include "resistor/lanczos.hpp"

namespace resistor {

void PushConfig::validate() const {
  if (k == 0) throw std::invalid_argument("Lanczos Push needs k >= 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be finite and >= 0");
  if (sink_sign != 1.0 && sink_sign != -1.0) throw DomainError("sink_sign must be +1 or -1");
}

SparseVector amv(const Graph& g, const SparseVector& v, double eps, std::size_t* edges_relaxed,
                 PushWorkspace* workspace) {
  if (v.dimension() != g.node_count()) throw DimensionError("sparse vector does not match the graph");
  std::optional<PushWorkspace> local;
  if (!workspace) workspace = &local.emplace(g.node_count());
  auto& acc = workspace->accumulator();
  const auto& offsets = g.offsets();
  const auto& nbrs = g.neighbor_array();
  const auto& w = g.weight_array();
  const auto& deg = g.weighted_degrees();
  const auto& isd = g.inv_sqrt_degrees();
  std::size_t relaxed = 0;
  for (const auto& [u, value] : v) {
    const double mag = std::abs(value);
    const double du = deg[u];
    // Sum w * d_u^{-1/2} * v(u) first and scale by d_x^{-1/2} at the end:
    // the same operation order as the dense gather kernel.
    for (std::size_t a = offsets[u]; a < offsets[u + 1]; ++a) {
      const Vertex x = nbrs[a];
      if (!(mag > eps * std::sqrt(du * deg[x]))) continue;
      acc.add(x, w[a] * isd[u] * value);
      ++relaxed;
    }
  }
  if (edges_relaxed) *edges_relaxed = relaxed;
  return acc.extract(isd);
}

SparseVector restrict_to_subset(const SparseVector& v, const Graph& g, double eps) {
  std::vector<SparseVector::Entry> kept;
  for (const auto& e : v) {
    if (std::abs(e.value) > eps * g.degree(e.index)) kept.push_back(e);
  }
  return SparseVector::from_entries(v.dimension(), std::move(kept));
}

SparseVector sparse_normalized_adjacency(const Graph& g, const SparseVector& v, PushWorkspace* workspace) {
  return amv(g, v, 0.0, nullptr, workspace);
}

namespace {

SparseVector restrict_to_vertices(const SparseVector& v, std::vector<Vertex> subset) {
  std::sort(subset.begin(), subset.end());
  std::vector<SparseVector::Entry> kept;
  for (const auto& e : v) {
    if (std::binary_search(subset.begin(), subset.end(), e.index)) kept.push_back(e);
  }
  return SparseVector::from_entries(v.dimension(), std::move(kept));
}

SparseVector positive_part(const SparseVector& v, double sign) {
  std::vector<SparseVector::Entry> kept;
  for (const auto& e : v) {
    if (sign * e.value > 0.0) kept.push_back(e);
  }
  return SparseVector::from_entries(v.dimension(), std::move(kept));
}

}  // namespace

PushResult lanczos_push_rd(const Graph& g, Vertex s, Vertex t, const PushConfig& cfg, PushWorkspace* workspace) {
  g.check_vertex(s);
  g.check_vertex(t);
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  PushResult result;
  result.estimate.method = Method::LanczosPush;
  if (s == t) return result;

  std::optional<PushWorkspace> local;
  if (!workspace) workspace = &local.emplace(g.node_count());
  if (workspace->accumulator().dimension() != g.node_count()) {
    throw DimensionError("push workspace was sized for a different graph");
  }

  const std::size_t n = g.node_count();
  const double ds = g.degree(s);
  const double dt = g.degree(t);
  const double scale = std::sqrt(1.0 / ds + 1.0 / dt);
  const SparseVector v1 = SparseVector::from_entries(
      n, {{s, 1.0 / std::sqrt(ds) / scale}, {t, cfg.sink_sign / std::sqrt(dt) / scale}});

  SparseVector v = v1;
  SparseVector v_prev(n);             // full v_{i-1}, only for diagnostics
  SparseVector v_prev_restricted(n);  // v_{i-1} on S_{i-1}
  double beta = 0.0;
  result.first_row.push_back(v1.dot(v1));

  for (std::size_t i = 1; i <= cfg.k; ++i) {
    const double eps = cfg.epsilon_at(i);
    if (!(eps >= 0.0)) throw DomainError("epsilon schedule produced a negative threshold");
    const SparseVector v_restricted = (i == 1 && cfg.first_subset_override)
                                          ? restrict_to_vertices(v, *cfg.first_subset_override)
                                          : restrict_to_subset(v, g, eps);
    std::size_t relaxed = 0;
    SparseVector w = amv(g, v, eps, &relaxed, workspace);
    if (i > 1) w = w.minus_scaled(beta, v_prev_restricted);
    const double alpha = w.dot(v);
    w = w.minus_scaled(alpha, v_restricted);
    const double beta_next = w.norm2();

    result.stats.touched_edges += relaxed;
    result.stats.inner_product_ops += v.size() + v_restricted.size() + v_prev_restricted.size();
    result.stats.peak_support = std::max(result.stats.peak_support, v.size());
    if (cfg.collect_stats || cfg.diagnostics) {
      PushIterationStats it;
      it.subset_size = v_restricted.size();
      it.support_size = v.size();
      it.edges_relaxed = relaxed;
      it.c2_term = v.norm1() + sparse_normalized_adjacency(g, positive_part(v, 1.0), workspace).norm1() +
                   sparse_normalized_adjacency(g, positive_part(v, -1.0), workspace).norm1();
      if (cfg.diagnostics) {
        // w minus the exact three-term update
        const SparseVector exact =
            sparse_normalized_adjacency(g, v, workspace).minus_scaled(alpha, v).minus_scaled(beta, v_prev);
        const SparseVector delta = w.minus_scaled(1.0, exact);
        for (const auto& e : delta) {
          const double mag = std::abs(e.value);
          it.delta_max_abs = std::max(it.delta_max_abs, mag);
          if (eps > 0.0) it.delta_ratio = std::max(it.delta_ratio, mag / (eps * g.degree(e.index)));
        }
      }
      result.stats.iterations.push_back(it);
    }
    if (cfg.keep_iterates) result.iterates.push_back(v);

    result.t.alpha.push_back(alpha);
    result.k_effective = i;
    if (beta_next < kBreakdown) {
      result.breakdown = true;
      break;
    }
    if (i == cfg.k) break;
    result.t.beta.push_back(beta_next);
    SparseVector v_next = w.divided(beta_next);
    result.first_row.push_back(v1.dot(v_next));
    v_prev = std::move(v);
    v_prev_restricted = v_restricted;
    v = std::move(v_next);
    beta = beta_next;
  }

  const auto y = tridiag_solve_e1(result.t);
  double acc = 0.0;
  for (std::size_t j = 0; j < y.size(); ++j) acc += result.first_row[j] * y[j];
  result.estimate.value = scale * scale * acc;
  result.estimate.iterations = result.k_effective;
  result.estimate.touched_edges = result.stats.touched_edges;
  result.estimate.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

AssumptionReport check_assumption(const TridiagonalMatrix& t, double lambda_min_a, double lambda2_a, double tol) {
  t.validate();
  AssumptionReport r;
  const EigenRange range = tridiag_eigen_range(t);
  r.t_min = range.min;
  r.t_max = range.max;
  r.lambda_min_a = lambda_min_a;
  r.lambda2_a = lambda2_a;
  r.lower_margin = range.min - lambda_min_a;
  r.upper_margin = lambda2_a - range.max;
  r.pass = r.lower_margin >= -tol && r.upper_margin >= -tol;
  return r;
}

C1Measurement measure_c1(const Graph& g, Vertex s, Vertex t, std::size_t k) {
  g.check_vertex(s);
  g.check_vertex(t);
  C1Measurement c1;
  for (Vertex u : {s, t}) {
    const ChebyshevNorms norms = chebyshev_walk_norms(g, u, k);
    for (double x : norms.weighted) c1.weighted = std::max(c1.weighted, x);
    for (double x : norms.plain) c1.plain = std::max(c1.plain, x);
  }
  return c1;
}

double measure_c2(const PushStats& stats) {
  double c2 = 0.0;
  for (const auto& it : stats.iterations) c2 = std::max(c2, it.c2_term);
  return c2;
}

WorkCaps check_work_caps(const Graph& g, double c1, double c2, double tol) {
  WorkCaps c;
  c.c1 = c1;
  c.c2 = c2;
  c.c1_cap = std::sqrt(static_cast<double>(g.edge_count()));
  c.c2_cap = 3.0 * std::sqrt(static_cast<double>(g.node_count()));
  c.c1_ok = c1 <= c.c1_cap * (1.0 + tol);
  c.c2_ok = c2 <= c.c2_cap * (1.0 + tol);
  return c;
}

}  // namespace resistor
