"""Run reports and the scaling benchmark.

The scaling claim is asymptotic: one special-even-pair search costs O(nm) and
the whole coloring O(n^2 m) in the neighbor-scan cost model.  The benchmark
stands in for that with a log-log fit of instrumented operation counts against
n*m and n^2*m over a family of growing instances.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .engine import Coloring, OpCounters, PipelineObserver, color_artemis, is_proper
from .generators import generate
from .graphs import ContractionTrace, Graph, components, contract

DEFAULT_BENCH_DENSITY = 0.5


@dataclass
class RunReport:
    """One pipeline run: sizes, result, per-phase operation counts, timing."""

    input_id: str
    n: int
    m: int
    num_colors: int
    contractions: int
    interesting_ops: int
    outer_ops: int
    even_pair_ops: int
    first_call_ops: int
    chain_depths: tuple[int, ...]
    wall_time: float
    verified: bool | None = None
    failures: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        assert self.contractions <= max(0, self.n - 1)
        assert self.num_colors <= self.n

    @property
    def total_ops(self) -> int:
        return self.interesting_ops + self.outer_ops + self.even_pair_ops


def replay_contractions(g: Graph, trace: ContractionTrace) -> Graph:
    """Final graph of a trace, rebuilt step by step."""
    current = g
    for step in trace.steps:
        current, _ = contract(current, step.a, step.b)
    return current


def run_instance(g: Graph, input_id: str, *,
                 observer: PipelineObserver | None = None,
                 ) -> tuple[RunReport, Coloring, ContractionTrace]:
    counters = OpCounters()
    start = time.perf_counter()
    coloring, trace = color_artemis(g, counters=counters, observer=observer)
    wall = time.perf_counter() - start
    verified = None
    failures: tuple[str, ...] = ()
    if observer is not None and hasattr(observer, "failures"):
        failures = tuple(observer.failures)
        verified = not failures and is_proper(g, coloring)
    report = RunReport(
        input_id=input_id,
        n=g.n,
        m=g.m,
        num_colors=coloring.num_colors,
        contractions=len(trace.steps),
        interesting_ops=counters.interesting,
        outer_ops=counters.outer,
        even_pair_ops=counters.even_pair,
        first_call_ops=counters.per_call[0] if counters.per_call else 0,
        chain_depths=tuple(counters.chain_depths),
        wall_time=wall,
        verified=verified,
        failures=failures,
    )
    return report, coloring, trace


def fit_loglog_slope(xs: list[float], ys: list[float]) -> float:
    """Least-squares slope of log(y) against log(x)."""
    return float(np.polyfit(np.log(xs), np.log(ys), 1)[0])


@dataclass
class BenchResult:
    family: str
    density: float
    seed: int
    reports: list[RunReport] = field(default_factory=list)
    total_slope: float | None = None       # total ops against n^2 * m
    first_call_slope: float | None = None  # first search ops against n * m

    def table(self) -> str:
        header = (f"{'n':>6} {'m':>8} {'colors':>6} {'contr':>6} "
                  f"{'interesting':>12} {'outer':>10} {'evenpair':>10} "
                  f"{'total':>12} {'first_call':>12} {'wall_s':>8}")
        rows = [header]
        for r in self.reports:
            rows.append(f"{r.n:>6} {r.m:>8} {r.num_colors:>6} {r.contractions:>6} "
                        f"{r.interesting_ops:>12} {r.outer_ops:>10} {r.even_pair_ops:>10} "
                        f"{r.total_ops:>12} {r.first_call_ops:>12} {r.wall_time:>8.3f}")
        if self.total_slope is not None:
            rows.append(f"slope log(total ops) vs log(n^2*m):      {self.total_slope:.3f}")
        if self.first_call_slope is not None:
            rows.append(f"slope log(first-call ops) vs log(n*m):   {self.first_call_slope:.3f}")
        return "\n".join(rows)


def bench(family: str, sizes: list[int], seed: int, *,
          density: float = DEFAULT_BENCH_DENSITY) -> BenchResult:
    """Color one instance per size and fit the operation-count scaling.

    With a single size there is nothing to fit and the slopes stay None.
    """
    result = BenchResult(family=family, density=density, seed=seed)
    for i, n in enumerate(sizes):
        g = generate(family, n, density, seed + i)
        report, coloring, _ = run_instance(g, f"{family}-n{n}-s{seed + i}")
        if not is_proper(g, coloring):
            raise AssertionError(f"improper coloring on {report.input_id}")
        result.reports.append(report)
    if len(sizes) > 1:
        xs_total = [r.n * r.n * r.m for r in result.reports]
        xs_first = [r.n * r.m for r in result.reports]
        result.total_slope = fit_loglog_slope(xs_total, [r.total_ops for r in result.reports])
        result.first_call_slope = fit_loglog_slope(
            xs_first, [r.first_call_ops for r in result.reports])
    return result


def residue_cliques(g: Graph, trace: ContractionTrace) -> list[list[int]]:
    """Clique partition of the fully contracted graph, ordered by smallest member."""
    final = replay_contractions(g, trace)
    return [sorted(part) for part in components(final)]
