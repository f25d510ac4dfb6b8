#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resistor/estimate.hpp"
#include "resistor/graph.hpp"

namespace resistor {

enum class QueryPolicy { Uniform, TopDegree };

struct QuerySet {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  QueryPolicy policy = QueryPolicy::Uniform;
  std::uint64_t seed = 0;
};

/// `count` distinct sources and `count` distinct sinks (all 2*count vertices
/// distinct, clamped to n/2), zipped or crossed. Top-degree takes the
/// 2*count highest-degree vertices and alternates them between the sides.
QuerySet make_query_set(const Graph& g, std::size_t count, QueryPolicy policy, std::uint64_t seed,
                        bool cross = false);

struct GroundTruth {
  std::vector<double> values;
  Method method = Method::Exact;
};

/// Dense exact oracle when n <= cap, otherwise the power method with
/// `pm_steps` steps. Throws DomainError when the PM work
/// (steps * arcs * pairs) exceeds `edge_budget`.
GroundTruth compute_ground_truth(const Graph& g, const QuerySet& queries, std::size_t cap = 2000,
                                 std::size_t pm_steps = 20000, double edge_budget = 1e12);

struct BenchParams {
  std::size_t l = 10;         // pm / rw length
  std::size_t k = 10;         // lz / lzpush steps
  double epsilon = 1e-3;      // lzpush threshold
  std::size_t n_r = 1000;     // rw walks per side and length
  std::uint64_t seed = 1;
};

/// The swept parameter: pm -> l, rw -> l, lz -> k, lzpush -> epsilon, exact -> unused.
struct GridPoint {
  Method method;
  double param;
};

/// Runs one estimator with `param` substituted into `base`.
RDEstimate run_estimator(const Graph& g, Vertex s, Vertex t, Method method, double param, const BenchParams& base);

struct BenchRecord {
  Method method = Method::Exact;
  double param = 0.0;
  std::size_t pair = 0;
  Vertex s = 0;
  Vertex t = 0;
  double estimate = 0.0;
  double abs_err = 0.0;
  double seconds = 0.0;
  std::size_t touched_edges = 0;
};

/// Every (grid point, pair) combination, ordered by grid position then pair
/// regardless of which worker finished first.
std::vector<BenchRecord> run_bench(const Graph& g, const QuerySet& queries, const GroundTruth& truth,
                                   const std::vector<GridPoint>& grid, const BenchParams& base,
                                   unsigned threads = 1);

/// Header: method,param,pair,abs_err,seconds,touched_edges
void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

struct BenchRow {
  std::string method;
  double param = 0.0;
  std::size_t pair = 0;
  double abs_err = 0.0;
  double seconds = 0.0;
  std::size_t touched_edges = 0;
};

std::vector<BenchRow> parse_bench_csv(std::istream& in);

/// Peak resident set in bytes, when the platform reports it.
std::optional<std::size_t> peak_rss_bytes();

}  // namespace resistor
