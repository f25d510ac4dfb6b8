#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "resistor/baselines.hpp"
#include "resistor/bench.hpp"
#include "resistor/errors.hpp"
#include "resistor/graph.hpp"
#include "resistor/lanczos.hpp"
#include "resistor/lanczos_push.hpp"
#include "resistor/routing.hpp"
#include "resistor/spectral.hpp"

namespace resistor::cli {

namespace {

using nlohmann::json;

/// Failure reported after the output was written (e.g. unconverged spectrum).
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphArgs {
  std::string path;
  bool weighted = false;
};

void add_graph_args(CLI::App* cmd, GraphArgs& g) {
  cmd->add_option("graph", g.path, "edge list or .rdg cache")->required();
  cmd->add_flag("--weighted", g.weighted, "read a third column as edge weight");
}

Graph load(const GraphArgs& g) { return load_graph(g.path, g.weighted); }

/// Writes to --out when given, else to `out`.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw IoError("failed writing " + path);
}

struct QueryArgs {
  GraphArgs graph;
  ExternalId s = 0;
  ExternalId t = 0;
  std::string method = "lz";
  std::size_t l = 100;
  std::size_t k = 20;
  double eps = 1e-3;
  std::size_t nr = 1000;
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

int cmd_query(const QueryArgs& a, std::ostream& out, std::ostream& err) {
  const Method method = parse_method(a.method);
  const Graph g = load(a.graph);
  const Vertex s = g.internal_id(a.s);
  const Vertex t = g.internal_id(a.t);
  BenchParams p;
  p.l = a.l;
  p.k = a.k;
  p.epsilon = a.eps;
  p.n_r = a.nr;
  p.seed = a.seed;
  double param = 0.0;
  switch (method) {
    case Method::PowerMethod:
    case Method::RandomWalk: param = static_cast<double>(a.l); break;
    case Method::Lanczos: param = static_cast<double>(a.k); break;
    case Method::LanczosPush: param = a.eps; break;
    case Method::Exact: break;
  }
  const RDEstimate est = run_estimator(g, s, t, method, param, p);
  std::ostringstream text;
  if (a.format == "csv") {
    text.precision(17);
    text << "method,s,t,value,iterations,touched_edges,seconds\n"
         << method_tag(method) << ',' << a.s << ',' << a.t << ',' << est.value << ',' << est.iterations << ','
         << est.touched_edges << ',' << est.seconds << '\n';
  } else {
    json j{{"method", method_tag(method)}, {"s", a.s}, {"t", a.t}, {"value", est.value},
           {"iterations", est.iterations}, {"touched_edges", est.touched_edges}, {"seconds", est.seconds}};
    text << j.dump(2) << '\n';
  }
  emit(text.str(), a.out, out);
  err << "r(" << a.s << ", " << a.t << ") ~ " << est.value << " via " << method_tag(method) << '\n';
  return kExitOk;
}

struct BenchArgs {
  GraphArgs graph;
  std::vector<std::string> methods;
  std::vector<double> grid;
  std::size_t queries = 50;
  std::string policy = "uniform";
  bool cross = false;
  std::size_t l = 100;
  std::size_t k = 20;
  double eps = 1e-3;
  std::size_t nr = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::size_t truth_cap = kDefaultExactCap;
  std::size_t pm_steps = 20000;
  double budget = 1e12;
  std::string out;
  std::string format = "csv";
};

int cmd_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<GridPoint> grid;
  for (const auto& m : a.methods) {
    const Method method = parse_method(m);
    if (method == Method::Exact) {
      grid.push_back({method, 0.0});
      continue;
    }
    for (double p : a.grid) grid.push_back({method, p});
  }
  const Graph g = load(a.graph);
  const QueryPolicy policy = a.policy == "top-degree" ? QueryPolicy::TopDegree : QueryPolicy::Uniform;
  const QuerySet q = make_query_set(g, a.queries, policy, a.seed, a.cross);
  std::vector<BenchRecord> records;
  if (!grid.empty()) {
    const GroundTruth truth = compute_ground_truth(g, q, a.truth_cap, a.pm_steps, a.budget);
    BenchParams p;
    p.l = a.l;
    p.k = a.k;
    p.epsilon = a.eps;
    p.n_r = a.nr;
    p.seed = a.seed;
    records = run_bench(g, q, truth, grid, p, a.threads);
  }
  std::ostringstream text;
  if (a.format == "json") {
    json rows = json::array();
    for (const auto& r : records) {
      rows.push_back({{"method", method_tag(r.method)}, {"param", r.param}, {"pair", r.pair},
                      {"s", g.external_ids()[r.s]}, {"t", g.external_ids()[r.t]}, {"estimate", r.estimate},
                      {"abs_err", r.abs_err}, {"seconds", r.seconds}, {"touched_edges", r.touched_edges}});
    }
    json j{{"records", rows}};
    if (const auto rss = peak_rss_bytes()) j["peak_rss_bytes"] = *rss;
    text << j.dump(2) << '\n';
  } else {
    write_bench_csv(text, records);
  }
  emit(text.str(), a.out, out);
  err << records.size() << " records over " << q.pairs.size() << " pairs, n = " << g.node_count();
  if (const auto rss = peak_rss_bytes()) err << ", peak RSS " << *rss / 1024 << " KiB";
  err << '\n';
  return kExitOk;
}

struct KappaArgs {
  GraphArgs graph;
  double tol = 1e-9;
  std::size_t max_iter = 2'000'000;
  bool dense = false;
  std::string out;
};

int cmd_kappa(const KappaArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load(a.graph);
  json j{{"n", g.node_count()}, {"m", g.edge_count()}};
  bool converged = true;
  if (a.dense) {
    const DenseSpectrum d = dense_spectrum(g);
    j.update({{"lambda2_A", d.lambda2_a}, {"lambda_min_A", d.lambda_min_a}, {"mu2", 1.0 - d.lambda2_a},
              {"kappa", d.kappa}, {"source", "dense"}});
  } else {
    const SpectralEstimate e = estimate_spectrum(g, a.tol, a.max_iter);
    converged = e.converged;
    j.update({{"lambda2_A", e.lambda2_a}, {"lambda_min_A", e.lambda_min_a}, {"mu2", e.mu2}, {"kappa", e.kappa},
              {"iterations", e.iterations}, {"residual", e.residual}, {"converged", e.converged},
              {"source", "power"}});
  }
  emit(j.dump(2) + "\n", a.out, out);
  err << "kappa = " << j["kappa"].get<double>() << '\n';
  if (!converged) throw NumericalFailure("power iteration did not converge within max-iter");
  return kExitOk;
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::size_t m = 0;
  std::size_t attach = 3;
};

int cmd_gen(const GenArgs& a, std::ostream&, std::ostream& err) {
  Graph g;
  if (a.family == "er") {
    g = generate_er(a.n, a.m ? a.m : 5 * a.n, a.seed);
  } else if (a.family == "ba") {
    g = generate_ba(a.n, a.attach, a.seed);
  } else if (a.family == "path") {
    g = path_graph(a.n);
  } else if (a.family == "cycle") {
    g = cycle_graph(a.n);
  } else if (a.family == "complete") {
    g = complete_graph(a.n);
  } else if (a.family == "grid") {
    g = grid_graph(a.n, a.n);
  } else {
    throw std::invalid_argument("unknown family '" + a.family + "' (er, ba, path, cycle, complete, grid)");
  }
  const bool binary = a.out.size() >= 4 && a.out.compare(a.out.size() - 4, 4, ".rdg") == 0;
  std::ofstream file(a.out, binary ? std::ios::binary : std::ios::out);
  if (!file) throw IoError("cannot open " + a.out + " for writing");
  if (binary) {
    write_binary(file, g);
  } else {
    write_edge_list(file, g, false);
  }
  err << "wrote " << a.family << " graph with n = " << g.node_count() << ", m = " << g.edge_count() << " to "
      << a.out << '\n';
  return kExitOk;
}

struct RouteArgs {
  GraphArgs graph;
  ExternalId s = 0;
  ExternalId t = 0;
  std::size_t k = 0;
  std::size_t l = 3;
  double p_delete = 0.01;
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string out;
};

int cmd_route(const RouteArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load(a.graph);
  const Vertex s = g.internal_id(a.s);
  const Vertex t = g.internal_id(a.t);
  if (s == t) throw std::invalid_argument("route needs distinct endpoints");
  std::size_t k = a.k;
  if (k == 0) {
    // accuracy 1e-4 on the flow, as in the flow bound
    const SpectralEstimate spec = estimate_spectrum(g);
    k = lanczos_steps(spec.kappa, 1e-4 / static_cast<double>(g.edge_count()));
  }
  const RouteSet set = extract_routes(g, s, t, k, a.l);
  json routes = json::array();
  json bottlenecks = json::array();
  for (const Route& r : set.routes) {
    json path = json::array();
    for (Vertex v : r.vertices) path.push_back(g.external_ids()[v]);
    routes.push_back(path);
    bottlenecks.push_back(r.bottleneck);
  }
  json metrics{{"k", k}, {"extracted", set.extracted}, {"short_of_target", set.short_of_target},
               {"bottlenecks", bottlenecks}};
  if (!set.routes.empty()) {
    const RouteMetrics m = route_metrics(g, set.routes, s, t, a.p_delete, a.trials, a.seed, a.threads);
    metrics.update({{"stretch", m.stretch}, {"diversity", m.diversity}, {"mean_jaccard", m.mean_jaccard},
                    {"robustness", m.robustness}, {"shortest", m.shortest}, {"p_delete", a.p_delete},
                    {"trials", a.trials}});
  }
  emit(json{{"routes", routes}, {"metrics", metrics}}.dump(2) + "\n", a.out, out);
  err << set.routes.size() << " route(s) from " << a.s << " to " << a.t << '\n';
  return kExitOk;
}

struct AssumptionArgs {
  GraphArgs graph;
  ExternalId s = 0;
  ExternalId t = 0;
  std::size_t k = 15;
  double eps = 1e-3;
  double tol = 1e-6;
  std::string out;
};

int cmd_check_assumption(const AssumptionArgs& a, std::ostream& out, std::ostream& err) {
  const Graph g = load(a.graph);
  const Vertex s = g.internal_id(a.s);
  const Vertex t = g.internal_id(a.t);
  if (s == t) throw std::invalid_argument("check-assumption needs distinct endpoints");
  double lmin = 0.0;
  double l2 = 0.0;
  std::string source;
  if (g.node_count() <= kDefaultExactCap) {
    const DenseSpectrum d = dense_spectrum(g);
    lmin = d.lambda_min_a;
    l2 = d.lambda2_a;
    source = "dense";
  } else {
    const SpectralEstimate e = estimate_spectrum(g);
    if (!e.converged) throw NumericalFailure("spectral bounds did not converge");
    lmin = e.lambda_min_a;
    l2 = e.lambda2_a;
    source = "power";
  }
  PushConfig cfg;
  cfg.k = a.k;
  cfg.epsilon = a.eps;
  cfg.collect_stats = true;
  const PushResult run = lanczos_push_rd(g, s, t, cfg);
  const AssumptionReport rep = check_assumption(run.t, lmin, l2, a.tol);
  const C1Measurement c1 = measure_c1(g, s, t, run.k_effective);
  const WorkCaps caps = check_work_caps(g, c1.weighted, measure_c2(run.stats));
  json j{{"pass", rep.pass},
         {"t_min", rep.t_min},
         {"t_max", rep.t_max},
         {"lambda_min_A", lmin},
         {"lambda2_A", l2},
         {"lower_margin", rep.lower_margin},
         {"upper_margin", rep.upper_margin},
         {"tol", a.tol},
         {"spectrum_source", source},
         {"k_effective", run.k_effective},
         {"estimate", run.estimate.value},
         {"touched_edges", run.estimate.touched_edges},
         {"c1", caps.c1},
         {"c1_plain", c1.plain},
         {"c1_cap", caps.c1_cap},
         {"c2", caps.c2},
         {"c2_cap", caps.c2_cap},
         {"c1_ok", caps.c1_ok},
         {"c2_ok", caps.c2_ok}};
  emit(j.dump(2) + "\n", a.out, out);
  err << (rep.pass ? "pass" : "FAIL") << ": spectrum of T in [" << rep.t_min << ", " << rep.t_max
      << "], allowed [" << lmin << ", " << l2 << "]\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"resistance distance queries and benchmarks", "resistor"};
  app.require_subcommand(1);

  const std::vector<std::string> methods{"exact", "pm", "rw", "lz", "lzpush"};

  QueryArgs qa;
  auto* query = app.add_subcommand("query", "estimate r(s, t) with one method");
  add_graph_args(query, qa.graph);
  query->add_option("s", qa.s)->required();
  query->add_option("t", qa.t)->required();
  query->add_option("--method", qa.method)->check(CLI::IsMember(methods));
  query->add_option("--l", qa.l, "pm/rw walk length");
  query->add_option("--k", qa.k, "Lanczos steps");
  query->add_option("--eps", qa.eps, "push threshold");
  query->add_option("--nr", qa.nr, "random walks per length and endpoint");
  query->add_option("--seed", qa.seed);
  query->add_option("--out", qa.out);
  query->add_option("--format", qa.format)->check(CLI::IsMember({"json", "csv"}));

  BenchArgs ba;
  auto* bench = app.add_subcommand("bench", "error/time sweep against ground truth (CSV)");
  add_graph_args(bench, ba.graph);
  bench->add_option("--method", ba.methods, "repeatable")->check(CLI::IsMember(methods))->required();
  bench->add_option("--grid", ba.grid, "swept values: l for pm/rw, k for lz, eps for lzpush")->delimiter(',');
  bench->add_option("--queries", ba.queries, "number of (s, t) pairs");
  bench->add_option("--policy", ba.policy)->check(CLI::IsMember({"uniform", "top-degree"}));
  bench->add_flag("--cross", ba.cross, "all source x sink pairs instead of zipped pairs");
  bench->add_option("--l", ba.l);
  bench->add_option("--k", ba.k, "fixed k for lzpush");
  bench->add_option("--eps", ba.eps);
  bench->add_option("--nr", ba.nr);
  bench->add_option("--seed", ba.seed);
  bench->add_option("--threads", ba.threads);
  bench->add_option("--truth-cap", ba.truth_cap, "largest n for the exact oracle");
  bench->add_option("--pm-steps", ba.pm_steps, "power-method steps for ground truth above the cap");
  bench->add_option("--budget", ba.budget, "arc budget for power-method ground truth");
  bench->add_option("--out", ba.out);
  bench->add_option("--format", ba.format)->check(CLI::IsMember({"json", "csv"}));

  KappaArgs ka;
  auto* kappa = app.add_subcommand("kappa", "condition number 2 / (1 - lambda_2(A))");
  add_graph_args(kappa, ka.graph);
  kappa->add_option("--tol", ka.tol);
  kappa->add_option("--max-iter", ka.max_iter);
  kappa->add_flag("--dense", ka.dense, "dense eigensolve (n <= 2000)");
  kappa->add_option("--out", ka.out);
  kappa->add_option("--format")->check(CLI::IsMember({"json"}));

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "write a synthetic graph (.rdg suffix: binary cache)");
  gen->add_option("family", ga.family, "er, ba, path, cycle, complete, grid")->required();
  gen->add_option("n", ga.n, "vertices (grid: side length)")->required();
  gen->add_option("seed", ga.seed)->required();
  gen->add_option("out", ga.out)->required();
  gen->add_option("--m", ga.m, "ER edge count (default 5n)");
  gen->add_option("--attach", ga.attach, "BA edges per new vertex");

  RouteArgs ra;
  auto* route = app.add_subcommand("route", "alternate routes from the electric flow");
  add_graph_args(route, ra.graph);
  route->add_option("s", ra.s)->required();
  route->add_option("t", ra.t)->required();
  route->add_option("--k", ra.k, "Lanczos steps (default from kappa)");
  route->add_option("--l", ra.l, "routes to keep");
  route->add_option("--p-delete", ra.p_delete);
  route->add_option("--trials", ra.trials);
  route->add_option("--seed", ra.seed);
  route->add_option("--threads", ra.threads);
  route->add_option("--out", ra.out);
  route->add_option("--format")->check(CLI::IsMember({"json"}));

  AssumptionArgs aa;
  auto* check = app.add_subcommand("check-assumption", "is the spectrum of T inside [lambda_min(A), lambda_2(A)]");
  add_graph_args(check, aa.graph);
  check->add_option("s", aa.s)->required();
  check->add_option("t", aa.t)->required();
  check->add_option("--k", aa.k);
  check->add_option("--eps", aa.eps);
  check->add_option("--tol", aa.tol);
  check->add_option("--out", aa.out);
  check->add_option("--format")->check(CLI::IsMember({"json"}));

  std::vector<const char*> argv{"resistor"};
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*query) return cmd_query(qa, out, err);
    if (*bench) return cmd_bench(ba, out, err);
    if (*kappa) return cmd_kappa(ka, out, err);
    if (*gen) return cmd_gen(ga, out, err);
    if (*route) return cmd_route(ra, out, err);
    if (*check) return cmd_check_assumption(aa, out, err);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const EmptyGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const SingularSystemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const NumericalFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::logic_error& e) {
    // invalid_argument, domain_error, out_of_range: bad request
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  }
  return kExitUsage;
}

}  // namespace resistor::cli
