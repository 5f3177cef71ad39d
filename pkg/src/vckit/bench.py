"""Benchmark sweeps over planted instances, with CSV and table reports.

A sweep runs every (n, k, seed) cell of the config through each
strategy on the same generated instance.  Records are deterministic
given the config except for the timing fields, so two runs of the same
config produce byte-identical CSV once the time_ms column is ignored.
The CSV is the integration point for any downstream analysis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, fields, replace
from statistics import median
from typing import Iterable, Optional, Sequence

from .generate import gen_planted
from .graph import GraphError
from .solver import BranchSolver, SolveTimeout, Strategy

CSV_HEADER = "n,k_input,tau,strategy,decision,nodes_expanded,max_depth,time_ms,seed,timed_out"

_STRATEGY_ORDER = tuple(Strategy)  # paper5, p3, edge


@dataclass
class BenchConfig:
    """One benchmark sweep: the cartesian product of the lists below.

    extra_edge_ratio scales with n (extra_edges = round(ratio * n)), so
    instances keep comparable density across sizes.  repetitions solves
    each cell that many times and reports the median time; the default
    of 1 keeps the stock sweep quick, and the other counters are
    identical across repetitions anyway.  time_limit (seconds) applies
    per solve, and an exceeded limit becomes a timed-out record rather
    than an error.
    """

    n_values: list[int] = field(default_factory=lambda: [1000, 2000, 5000, 10000])
    k_values: list[int] = field(default_factory=lambda: [6, 8, 10, 12])
    extra_edge_ratio: float = 0.5
    strategies: tuple[Strategy, ...] = _STRATEGY_ORDER
    seeds: list[int] = field(default_factory=lambda: [1])
    repetitions: int = 1
    time_limit: Optional[float] = 60.0

    def validate(self) -> None:
        if not self.n_values or not self.k_values or not self.seeds:
            raise ValueError("n_values, k_values and seeds must be non-empty")
        if any(n < 2 for n in self.n_values):
            raise ValueError(f"every n must be >= 2, got {self.n_values}")
        if any(k < 1 for k in self.k_values):
            raise ValueError(f"every k must be >= 1, got {self.k_values}")
        if any(seed < 0 for seed in self.seeds):
            raise ValueError(f"seeds must be non-negative, got {self.seeds}")
        worst_k = max(self.k_values)
        smallest_n = min(self.n_values)
        if 2 * worst_k > smallest_n:
            raise ValueError(
                f"k={worst_k} exceeds n/2 for n={smallest_n}; "
                "planted instances need k <= n/2"
            )
        if self.extra_edge_ratio < 0:
            raise ValueError(f"extra_edge_ratio must be >= 0, got {self.extra_edge_ratio}")
        if not self.strategies:
            raise ValueError("strategies must be non-empty")
        if self.repetitions < 1:
            raise ValueError(f"repetitions must be >= 1, got {self.repetitions}")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError(f"time_limit must be positive, got {self.time_limit}")


def default_config() -> BenchConfig:
    return BenchConfig()


@dataclass(frozen=True)
class BenchRecord:
    """One (n, k, strategy, seed) cell of a sweep.

    A timed-out record keeps its identity fields and tau but carries no
    decision or counters.  A record whose instance generation failed
    (infeasible parameters) has tau None and the failure text in error.
    """

    n: int
    k_input: int
    tau: Optional[int]
    strategy: Strategy
    decision: Optional[bool]
    nodes_expanded: Optional[int]
    max_depth: Optional[int]
    time_ms: Optional[float]
    seed: int
    timed_out: bool = False
    error: Optional[str] = None


def run_benchmark(config: BenchConfig) -> list[BenchRecord]:
    """Execute the sweep; one record per (n, k, strategy, seed) cell.

    Cells sharing (n, k, seed) solve the same generated instance.
    Generation failures and per-solve timeouts are recorded, not
    raised, so a sweep always completes.
    """
    config.validate()
    records: list[BenchRecord] = []
    for n in config.n_values:
        extra_edges = round(config.extra_edge_ratio * n)
        for k in config.k_values:
            for seed in config.seeds:
                try:
                    instance = gen_planted(n, k, extra_edges, seed)
                except GraphError as exc:
                    for strategy in config.strategies:
                        records.append(
                            BenchRecord(
                                n=n, k_input=k, tau=None, strategy=strategy,
                                decision=None, nodes_expanded=None,
                                max_depth=None, time_ms=None, seed=seed,
                                error=str(exc),
                            )
                        )
                    continue
                for strategy in config.strategies:
                    records.append(_solve_cell(instance, strategy, config))
    return records


def _solve_cell(instance, strategy: Strategy, config: BenchConfig) -> BenchRecord:
    n = instance.graph.vertex_count
    k = instance.planted_k
    times: list[float] = []
    outcome = None
    for _ in range(config.repetitions):
        solver = BranchSolver(instance.graph, strategy)
        try:
            outcome = solver.decide(k, time_limit=config.time_limit)
        except SolveTimeout:
            return BenchRecord(
                n=n, k_input=k, tau=k, strategy=strategy, decision=None,
                nodes_expanded=None, max_depth=None, time_ms=None,
                seed=instance.seed, timed_out=True,
            )
        times.append(outcome.stats.elapsed_ms)
    return BenchRecord(
        n=n,
        k_input=k,
        tau=k,
        strategy=strategy,
        decision=outcome.decision,
        nodes_expanded=outcome.stats.nodes_expanded,
        max_depth=outcome.stats.max_depth,
        time_ms=median(times),
        seed=instance.seed,
    )


@dataclass(frozen=True)
class BranchingFit:
    """Least-squares fit of log(nodes_expanded) against k for one
    (strategy, n) group; base = exp(slope) estimates the branching
    factor, log_rmse the fit residual in log space."""

    strategy: Strategy
    n: int
    base: float
    slope: float
    intercept: float
    log_rmse: float
    points: int


def estimate_branching_factor(records: Iterable[BenchRecord]) -> list[BranchingFit]:
    """Fit the empirical branching factor per (strategy, n) group.

    Every group present must have records at three or more distinct k
    and no timed-out or failed members; otherwise the fit would be
    meaningless, so a ValueError names the offending group.
    """
    groups: dict[tuple[Strategy, int], list[BenchRecord]] = {}
    for record in records:
        groups.setdefault((record.strategy, record.n), []).append(record)
    fits = []
    for strategy, n in sorted(groups, key=lambda key: (key[0].value, key[1])):
        members = groups[(strategy, n)]
        label = f"strategy={strategy.value} n={n}"
        if any(r.timed_out or r.error or r.nodes_expanded is None for r in members):
            raise ValueError(f"group {label} contains timed-out or failed records")
        distinct_k = {r.k_input for r in members}
        if len(distinct_k) < 3:
            raise ValueError(
                f"group {label} has {len(distinct_k)} distinct k values, need >= 3"
            )
        xs = [float(r.k_input) for r in members]
        ys = [math.log(r.nodes_expanded) for r in members]
        x_mean = sum(xs) / len(xs)
        y_mean = sum(ys) / len(ys)
        sxx = sum((x - x_mean) ** 2 for x in xs)
        sxy = sum((x - x_mean) * (y - y_mean) for x, y in zip(xs, ys))
        slope = sxy / sxx
        intercept = y_mean - slope * x_mean
        residual = sum((y - (slope * x + intercept)) ** 2 for x, y in zip(xs, ys))
        fits.append(
            BranchingFit(
                strategy=strategy,
                n=n,
                base=math.exp(slope),
                slope=slope,
                intercept=intercept,
                log_rmse=math.sqrt(residual / len(xs)),
                points=len(xs),
            )
        )
    return fits


def _sort_key(record: BenchRecord):
    return (record.n, record.k_input, record.strategy.value, record.seed)


def _csv_cell_bool(value: Optional[bool]) -> str:
    if value is None:
        return ""
    return "true" if value else "false"


def write_report(records: Iterable[BenchRecord], fmt: str = "csv") -> str:
    """Render records as 'csv' (machine) or 'table' (human) text.

    Both orders rows by (n, k_input, strategy, seed).  CSV emits one
    row per record under CSV_HEADER; the table groups rows by (n, k)
    with per-strategy median time and node columns.
    """
    ordered = sorted(records, key=_sort_key)
    if fmt == "csv":
        return _write_csv(ordered)
    if fmt == "table":
        return _write_table(ordered)
    raise ValueError(f"unknown report format {fmt!r}, expected 'csv' or 'table'")


def _write_csv(ordered: Sequence[BenchRecord]) -> str:
    lines = [CSV_HEADER]
    for r in ordered:
        lines.append(
            ",".join(
                (
                    str(r.n),
                    str(r.k_input),
                    "" if r.tau is None else str(r.tau),
                    r.strategy.value,
                    _csv_cell_bool(r.decision),
                    "" if r.nodes_expanded is None else str(r.nodes_expanded),
                    "" if r.max_depth is None else str(r.max_depth),
                    "" if r.time_ms is None else f"{r.time_ms:.3f}",
                    str(r.seed),
                    "true" if r.timed_out else "false",
                )
            )
        )
    return "\n".join(lines) + "\n"


def _write_table(ordered: Sequence[BenchRecord]) -> str:
    strategies = [s for s in _STRATEGY_ORDER if any(r.strategy is s for r in ordered)]
    cells: dict[tuple[int, int], dict[Strategy, list[BenchRecord]]] = {}
    for r in ordered:
        cells.setdefault((r.n, r.k_input), {}).setdefault(r.strategy, []).append(r)

    def time_cell(group: list[BenchRecord]) -> str:
        if any(r.error for r in group):
            return "failed"
        if any(r.timed_out for r in group):
            return "timeout"
        return f"{median(r.time_ms for r in group):.3f}"

    def nodes_cell(group: list[BenchRecord]) -> str:
        usable = [r.nodes_expanded for r in group if r.nodes_expanded is not None]
        if not usable:
            return "-"
        return str(round(median(usable)))

    header = ["n", "k", "tau"]
    header += [f"time_ms[{s.value}]" for s in strategies]
    header += [f"nodes[{s.value}]" for s in strategies]
    rows = [header]
    for (n, k) in sorted(cells):
        by_strategy = cells[(n, k)]
        taus = {r.tau for group in by_strategy.values() for r in group}
        taus.discard(None)
        row = [str(n), str(k), str(taus.pop()) if len(taus) == 1 else "-"]
        for s in strategies:
            group = by_strategy.get(s)
            row.append(time_cell(group) if group else "-")
        for s in strategies:
            group = by_strategy.get(s)
            row.append(nodes_cell(group) if group else "-")
        rows.append(row)

    widths = [max(len(row[i]) for row in rows) for i in range(len(header))]
    out = []
    for row in rows:
        out.append("  ".join(cell.rjust(widths[i]) for i, cell in enumerate(row)))
    return "\n".join(out) + "\n"


def parse_config_file(path) -> BenchConfig:
    """Read a key = value benchmark config.

    Blank lines and '#' comments are skipped.  List values split on
    commas and whitespace.  Recognized keys are the BenchConfig fields;
    anything else raises ValueError with the line number.  time_limit
    accepts 'none' to disable the limit.
    """
    config = BenchConfig()
    known = {f.name for f in fields(BenchConfig)}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"{path}: line {lineno}: expected 'key = value'")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip()
            if key not in known:
                raise ValueError(f"{path}: line {lineno}: unknown key {key!r}")
            try:
                config = replace(config, **{key: _parse_config_value(key, value)})
            except ValueError as exc:
                raise ValueError(f"{path}: line {lineno}: {exc}") from None
    return config


def _parse_config_value(key: str, value: str):
    parts = value.replace(",", " ").split()
    if key in ("n_values", "k_values", "seeds"):
        return [int(p) for p in parts]
    if key == "strategies":
        return tuple(Strategy(p) for p in parts)
    if key == "extra_edge_ratio":
        return float(value)
    if key == "repetitions":
        return int(value)
    if key == "time_limit":
        return None if value.lower() == "none" else float(value)
    raise AssertionError(f"unhandled key {key}")
