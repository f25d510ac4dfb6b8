"""Resistance distance on undirected graphs: exact, power method, random
walks, Lanczos and Lanczos Push, plus flow-based route extraction."""

import csv

from ._resistor import (
    Estimate,
    Graph,
    PushResult,
    Route,
    SingularSystemError,
    Spectrum,
    barabasi_albert,
    complete_graph,
    cycle_graph,
    dense_eigenvalues,
    electric_flow,
    erdos_renyi,
    estimate_spectrum,
    exact_rd,
    extract_routes,
    grid_graph,
    lanczos_push_rd,
    lanczos_rd,
    lanczos_tridiagonal,
    path_graph,
    power_method_rd,
    random_walk_rd,
    route_metrics,
)

BENCH_COLUMNS = ("method", "param", "pair", "abs_err", "seconds", "touched_edges")


def read_bench_csv(path):
    """Rows of a `resistor bench` CSV as dicts with numeric fields converted."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if tuple(reader.fieldnames or ()) != BENCH_COLUMNS:
            raise ValueError(f"unexpected bench header: {reader.fieldnames}")
        rows = []
        for r in reader:
            rows.append({
                "method": r["method"],
                "param": float(r["param"]),
                "pair": int(r["pair"]),
                "abs_err": float(r["abs_err"]),
                "seconds": float(r["seconds"]),
                "touched_edges": int(r["touched_edges"]),
            })
        return rows


def resistance(graph, s, t, method="lz", **kw):
    """Value of the estimate named by a CLI method tag: exact, pm, rw, lz, lzpush."""
    return float(_estimate(graph, s, t, method, kw))


def _estimate(graph, s, t, method, kw):
    if method == "exact":
        return exact_rd(graph, s, t)
    if method == "pm":
        return power_method_rd(graph, s, t, kw.get("l", 10))
    if method == "rw":
        return random_walk_rd(graph, s, t, kw.get("l", 10), kw.get("nr", 1000), kw.get("seed", 1))
    if method == "lz":
        return lanczos_rd(graph, s, t, kw.get("k", 10))
    if method == "lzpush":
        return lanczos_push_rd(graph, s, t, kw.get("k", 10), kw.get("eps", 1e-3)).estimate
    raise ValueError(f"unknown method {method!r}")
