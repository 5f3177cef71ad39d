"""Benchmark sweeps: record shape, determinism, reports, and fits."""

from __future__ import annotations

import math

import pytest

from vckit import (
    CSV_HEADER,
    BenchConfig,
    BenchRecord,
    Strategy,
    decide_vc,
    default_config,
    estimate_branching_factor,
    gen_planted,
    parse_config_file,
    run_benchmark,
    verify_cover,
    write_report,
)

TINY = dict(
    n_values=[40],
    k_values=[3],
    extra_edge_ratio=0.3,
    seeds=[1, 2],
    repetitions=2,
    time_limit=30.0,
)


def _strip_times(records):
    return [
        (r.n, r.k_input, r.tau, r.strategy, r.decision, r.nodes_expanded,
         r.max_depth, r.seed, r.timed_out, r.error)
        for r in records
    ]


def test_run_benchmark_record_shape():
    config = BenchConfig(**TINY)
    records = run_benchmark(config)
    assert len(records) == 1 * 1 * len(config.strategies) * 2
    for r in records:
        assert r.n == 40 and r.k_input == 3 and r.tau == 3
        assert r.decision is True
        assert not r.timed_out and r.error is None
        assert r.nodes_expanded >= 1
        assert r.max_depth <= r.k_input + 1
        assert r.time_ms is not None and r.time_ms >= 0


def test_benchmark_decisions_verify_on_regenerated_instances():
    config = BenchConfig(**TINY)
    for r in run_benchmark(config):
        instance = gen_planted(r.n, r.k_input, round(0.3 * r.n), r.seed)
        result = decide_vc(instance.graph, r.k_input, r.strategy)
        assert result.decision is True
        assert verify_cover(instance.graph, result.certificate)
        assert result.stats.nodes_expanded == r.nodes_expanded


def test_run_benchmark_deterministic_modulo_time():
    config = BenchConfig(**TINY)
    assert _strip_times(run_benchmark(config)) == _strip_times(run_benchmark(config))


def test_run_benchmark_records_generation_failures():
    # n=10, k=1 admits at most 8 extra edges; ratio 0.9 asks for 9.
    # the n=200 cell is feasible, so the sweep must carry on.
    config = BenchConfig(
        n_values=[10, 200], k_values=[1], extra_edge_ratio=0.9, seeds=[1],
        repetitions=1,
    )
    records = run_benchmark(config)
    failed = [r for r in records if r.error]
    good = [r for r in records if not r.error]
    assert {r.n for r in failed} == {10}
    assert {r.n for r in good} == {200}
    assert len(failed) == len(config.strategies)
    for r in failed:
        assert r.tau is None and r.decision is None and not r.timed_out
        assert "extra_edges" in r.error
    for r in good:
        assert r.decision is True


def test_config_validation():
    with pytest.raises(ValueError, match="repetitions"):
        BenchConfig(repetitions=0).validate()
    with pytest.raises(ValueError, match="k must be >= 1"):
        BenchConfig(k_values=[0]).validate()
    with pytest.raises(ValueError, match="non-empty"):
        BenchConfig(n_values=[]).validate()
    with pytest.raises(ValueError, match="time_limit"):
        BenchConfig(time_limit=0.0).validate()
    with pytest.raises(ValueError, match="seeds"):
        BenchConfig(seeds=[-3]).validate()
    with pytest.raises(ValueError, match="n/2"):
        BenchConfig(n_values=[10], k_values=[2, 6]).validate()
    default_config().validate()


def test_csv_header_and_layout():
    assert CSV_HEADER == (
        "n,k_input,tau,strategy,decision,nodes_expanded,max_depth,"
        "time_ms,seed,timed_out"
    )
    record = BenchRecord(
        n=40, k_input=3, tau=3, strategy=Strategy.CLASSIC_P3, decision=True,
        nodes_expanded=17, max_depth=4, time_ms=0.25, seed=9,
    )
    text = write_report([record], "csv")
    assert text == CSV_HEADER + "\n40,3,3,p3,true,17,4,0.250,9,false\n"


def test_csv_empty_input():
    assert write_report([], "csv") == CSV_HEADER + "\n"


def test_csv_rows_sorted():
    records = run_benchmark(
        BenchConfig(n_values=[44, 40], k_values=[3, 2], extra_edge_ratio=0.2,
                    seeds=[2, 1], repetitions=1)
    )
    lines = write_report(records, "csv").splitlines()[1:]
    keys = []
    for line in lines:
        parts = line.split(",")
        keys.append((int(parts[0]), int(parts[1]), parts[3], int(parts[8])))
    assert keys == sorted(keys)


def test_csv_timed_out_row_blanks():
    record = BenchRecord(
        n=1000, k_input=12, tau=12, strategy=Strategy.PAPER_FIVE, decision=None,
        nodes_expanded=None, max_depth=None, time_ms=None, seed=3, timed_out=True,
    )
    line = write_report([record], "csv").splitlines()[1]
    assert line == "1000,12,12,paper5,,,,,3,true"


def test_table_report_mentions_cells():
    records = run_benchmark(BenchConfig(**TINY))
    table = write_report(records, "table")
    assert "time_ms[paper5]" in table
    assert "nodes[edge]" in table
    data_row = table.splitlines()[1]
    assert data_row.split()[:3] == ["40", "3", "3"]


def test_write_report_rejects_unknown_format():
    with pytest.raises(ValueError, match="unknown report format"):
        write_report([], "xml")


def _fit_records(strategy, n, pairs):
    return [
        BenchRecord(
            n=n, k_input=k, tau=k, strategy=strategy, decision=True,
            nodes_expanded=nodes, max_depth=k, time_ms=1.0, seed=1,
        )
        for k, nodes in pairs
    ]


def test_branching_fit_recovers_exact_powers():
    records = _fit_records(
        Strategy.EDGE_BRANCH, 500, [(k, 3 * 2**k) for k in (6, 8, 10, 12)]
    )
    (fit,) = estimate_branching_factor(records)
    assert math.isclose(fit.base, 2.0, rel_tol=1e-9)
    assert math.isclose(fit.intercept, math.log(3), rel_tol=1e-9)
    assert fit.log_rmse < 1e-12
    assert fit.points == 4


def test_branching_fit_constant_nodes_gives_base_one():
    records = _fit_records(Strategy.CLASSIC_P3, 500, [(k, 64) for k in (4, 6, 8)])
    (fit,) = estimate_branching_factor(records)
    assert math.isclose(fit.base, 1.0, abs_tol=1e-12)


def test_branching_fit_groups_by_strategy_and_n():
    records = _fit_records(
        Strategy.EDGE_BRANCH, 100, [(k, 2**k) for k in (4, 6, 8)]
    ) + _fit_records(
        Strategy.PAPER_FIVE, 200, [(k, 3**k) for k in (4, 6, 8)]
    )
    fits = estimate_branching_factor(records)
    assert [(f.strategy, f.n) for f in fits] == [
        (Strategy.EDGE_BRANCH, 100),
        (Strategy.PAPER_FIVE, 200),
    ]
    assert math.isclose(fits[1].base, 3.0, rel_tol=1e-9)


def test_branching_fit_needs_three_k_values():
    records = _fit_records(Strategy.EDGE_BRANCH, 100, [(4, 16), (6, 64)])
    with pytest.raises(ValueError, match="distinct k"):
        estimate_branching_factor(records)


def test_branching_fit_rejects_timed_out_groups():
    records = _fit_records(Strategy.EDGE_BRANCH, 100, [(k, 2**k) for k in (4, 6, 8)])
    records.append(
        BenchRecord(
            n=100, k_input=10, tau=10, strategy=Strategy.EDGE_BRANCH,
            decision=None, nodes_expanded=None, max_depth=None, time_ms=None,
            seed=1, timed_out=True,
        )
    )
    with pytest.raises(ValueError, match="timed-out"):
        estimate_branching_factor(records)


def test_parse_config_file(tmp_path):
    path = tmp_path / "bench.cfg"
    path.write_text(
        """
        # sweep for a quick look
        n_values = 100, 200
        k_values = 4 5
        extra_edge_ratio = 0.25
        strategies = p3, edge
        seeds = 1, 2, 3
        repetitions = 2
        time_limit = none
        """
    )
    config = parse_config_file(path)
    assert config.n_values == [100, 200]
    assert config.k_values == [4, 5]
    assert config.extra_edge_ratio == 0.25
    assert config.strategies == (Strategy.CLASSIC_P3, Strategy.EDGE_BRANCH)
    assert config.seeds == [1, 2, 3]
    assert config.repetitions == 2
    assert config.time_limit is None


def test_parse_config_file_errors(tmp_path):
    bad_key = tmp_path / "bad_key.cfg"
    bad_key.write_text("nvalues = 1\n")
    with pytest.raises(ValueError, match="line 1: unknown key"):
        parse_config_file(bad_key)

    bad_value = tmp_path / "bad_value.cfg"
    bad_value.write_text("k_values = 4\nstrategies = warp\n")
    with pytest.raises(ValueError, match="line 2"):
        parse_config_file(bad_value)

    no_eq = tmp_path / "no_eq.cfg"
    no_eq.write_text("repetitions\n")
    with pytest.raises(ValueError, match="expected 'key = value'"):
        parse_config_file(no_eq)
