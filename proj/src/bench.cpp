#include "resistor/bench.hpp"

#include <sys/resource.h>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <istream>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <thread>

#include "resistor/baselines.hpp"
#include "resistor/errors.hpp"
#include "resistor/lanczos.hpp"
#include "resistor/lanczos_push.hpp"
#include "resistor/random.hpp"

namespace resistor {

QuerySet make_query_set(const Graph& g, std::size_t count, QueryPolicy policy, std::uint64_t seed, bool cross) {
  const std::size_t n = g.node_count();
  count = std::min(count, n / 2);
  if (count == 0) throw DomainError("graph too small for a query set");
  std::vector<Vertex> picked;
  if (policy == QueryPolicy::Uniform) {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    Rng rng(seed);
    // partial Fisher-Yates
    for (std::size_t i = 0; i < 2 * count; ++i) {
      const std::size_t j = i + rng.below(n - i);
      std::swap(all[i], all[j]);
    }
    picked.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(2 * count));
  } else {
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{0});
    std::stable_sort(all.begin(), all.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    picked.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(2 * count));
  }
  std::vector<Vertex> sources;
  std::vector<Vertex> sinks;
  for (std::size_t i = 0; i < picked.size(); ++i) {
    if (policy == QueryPolicy::Uniform) {
      (i < count ? sources : sinks).push_back(picked[i]);
    } else {
      (i % 2 == 0 ? sources : sinks).push_back(picked[i]);
    }
  }
  QuerySet q;
  q.policy = policy;
  q.seed = seed;
  if (cross) {
    for (Vertex s : sources)
      for (Vertex t : sinks) q.pairs.emplace_back(s, t);
  } else {
    for (std::size_t i = 0; i < count; ++i) q.pairs.emplace_back(sources[i], sinks[i]);
  }
  return q;
}

GroundTruth compute_ground_truth(const Graph& g, const QuerySet& queries, std::size_t cap, std::size_t pm_steps,
                                 double edge_budget) {
  GroundTruth gt;
  if (g.node_count() <= cap) {
    const LaplacianPseudoinverse oracle(g, cap);
    gt.method = Method::Exact;
    for (const auto& [s, t] : queries.pairs) gt.values.push_back(oracle.resistance(s, t));
    return gt;
  }
  const double work = static_cast<double>(pm_steps) * static_cast<double>(g.arc_count()) *
                      static_cast<double>(queries.pairs.size());
  if (work > edge_budget) {
    throw DomainError("ground-truth budget exceeded: power method would touch " + std::to_string(work) +
                      " arcs (budget " + std::to_string(edge_budget) + ")");
  }
  gt.method = Method::PowerMethod;
  for (const auto& [s, t] : queries.pairs) gt.values.push_back(power_method_rd(g, s, t, pm_steps).value);
  return gt;
}

RDEstimate run_estimator(const Graph& g, Vertex s, Vertex t, Method method, double param, const BenchParams& base) {
  auto count = [](double p) {
    if (!(p >= 0.0) || p != std::floor(p)) throw DomainError("parameter must be a nonnegative integer");
    return static_cast<std::size_t>(p);
  };
  switch (method) {
    case Method::Exact: {
      const auto start = std::chrono::steady_clock::now();
      RDEstimate est;
      est.method = Method::Exact;
      est.value = exact_rd(g, s, t);
      est.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      return est;
    }
    case Method::PowerMethod:
      return power_method_rd(g, s, t, count(param));
    case Method::RandomWalk:
      return random_walk_rd(g, s, t, count(param), base.n_r, base.seed);
    case Method::Lanczos:
      return lanczos_rd(g, s, t, count(param)).estimate;
    case Method::LanczosPush: {
      PushConfig cfg;
      cfg.k = base.k;
      cfg.epsilon = param;
      return lanczos_push_rd(g, s, t, cfg).estimate;
    }
  }
  throw std::invalid_argument("unknown method");
}

std::vector<BenchRecord> run_bench(const Graph& g, const QuerySet& queries, const GroundTruth& truth,
                                   const std::vector<GridPoint>& grid, const BenchParams& base, unsigned threads) {
  if (truth.values.size() != queries.pairs.size()) throw DimensionError("ground truth does not match the query set");
  const std::size_t pairs = queries.pairs.size();
  std::vector<BenchRecord> records(grid.size() * pairs);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t job = next++; job < records.size(); job = next++) {
      const GridPoint& gp = grid[job / pairs];
      const std::size_t p = job % pairs;
      const auto [s, t] = queries.pairs[p];
      try {
        const RDEstimate est = run_estimator(g, s, t, gp.method, gp.param, base);
        records[job] = {gp.method, gp.param, p, s, t, est.value, std::abs(est.value - truth.values[p]),
                        est.seconds, est.touched_edges};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  std::ostringstream buf;
  buf.precision(17);
  buf << "method,param,pair,abs_err,seconds,touched_edges\n";
  for (const auto& r : records) {
    buf << method_tag(r.method) << ',' << r.param << ',' << r.pair << ',' << r.abs_err << ',' << r.seconds << ','
        << r.touched_edges << '\n';
  }
  out << buf.str();
  if (!out) throw IoError("failed to write CSV");
}

namespace {

template <typename T>
T parse_field(std::string_view tok, std::size_t line_no) {
  T value{};
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "bad CSV field '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

std::vector<BenchRow> parse_bench_csv(std::istream& in) {
  std::vector<BenchRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line_no == 1) {
      if (line != "method,param,pair,abs_err,seconds,touched_edges") throw ParseError(1, "unexpected CSV header");
      continue;
    }
    std::vector<std::string_view> f;
    std::string_view rest(line);
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1)) {
      f.push_back(rest.substr(0, pos));
    }
    f.push_back(rest);
    if (f.size() != 6) throw ParseError(line_no, "expected 6 CSV fields");
    BenchRow r;
    r.method = std::string(f[0]);
    r.param = parse_field<double>(f[1], line_no);
    r.pair = parse_field<std::size_t>(f[2], line_no);
    r.abs_err = parse_field<double>(f[3], line_no);
    r.seconds = parse_field<double>(f[4], line_no);
    r.touched_edges = parse_field<std::size_t>(f[5], line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::optional<std::size_t> peak_rss_bytes() {
  rusage usage{};
  if (getrusage(RUSAGE_SELF, &usage) != 0) return std::nullopt;
  // Linux reports kilobytes
  return static_cast<std::size_t>(usage.ru_maxrss) * 1024;
}

}  // namespace resistor
