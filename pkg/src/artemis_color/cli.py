"""Batch front door: color, detect, generate and bench subcommands.

Exit codes: 0 success, 1 the input could not be colored as an Artemis graph
(or verification failed), 2 parse error, 3 oracle-budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .bench import DEFAULT_BENCH_DENSITY, bench, residue_cliques, run_instance
from .dimacs import DimacsError, parse_dimacs, write_coloring, write_dimacs
from .engine import ColoringError, NotArtemisError
from .generators import generate
from .graphs import ContractionTrace, Graph, GraphError
from .oracles import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    find_antihole,
    find_odd_hole,
    find_prism,
)
from .verify import OracleVerifier

EXIT_OK = 0
EXIT_NOT_ARTEMIS = 1
EXIT_PARSE = 2
EXIT_BUDGET = 3


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_dimacs(text, on_warning=lambda msg: print(f"warning: {msg}", file=sys.stderr))


def _trace_json(trace: ContractionTrace, chain_depths: tuple[int, ...],
                residue: list[list[int]]) -> str:
    steps = [
        {"a": step.a, "b": step.b, "merged": step.merged,
         "chain_depth": chain_depths[i] if i < len(chain_depths) else None}
        for i, step in enumerate(trace.steps)
    ]
    payload = {"original_n": trace.original_n, "steps": steps,
               "residue_cliques": residue}
    return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def _cmd_color(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.file)
    except (DimacsError, OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    verifier = None
    if args.verify:
        if g.n <= DEFAULT_BUDGET.max_n:
            verifier = OracleVerifier(DEFAULT_BUDGET)
        else:
            print(f"note: n={g.n} exceeds the oracle budget of "
                  f"{DEFAULT_BUDGET.max_n}; verifying properness and residue "
                  f"consistency only", file=sys.stderr)
    try:
        report, coloring, trace = run_instance(g, args.file, observer=verifier)
    except (NotArtemisError, ColoringError) as exc:
        print(f"error: input is not colorable as an Artemis graph: {exc}", file=sys.stderr)
        return EXIT_NOT_ARTEMIS
    residue = residue_cliques(g, trace)
    if args.verify:
        # Properness was already enforced by the lift; the residue certifies
        # the color count.
        if coloring.num_colors != max((len(p) for p in residue), default=0):
            print("error: color count disagrees with the residue cliques", file=sys.stderr)
            return EXIT_NOT_ARTEMIS
        if verifier is not None:
            for failure in verifier.failures:
                print(f"verify: {failure}", file=sys.stderr)
            if not verifier.ok:
                return EXIT_NOT_ARTEMIS
            print(f"verify: {sum(verifier.checks.values())} oracle checks passed",
                  file=sys.stderr)
    if args.trace_json:
        Path(args.trace_json).write_text(
            _trace_json(trace, report.chain_depths, residue))
    sys.stdout.write(write_coloring(coloring))
    return EXIT_OK


def _cmd_detect(args: argparse.Namespace) -> int:
    try:
        g = _read_graph(args.file)
    except (DimacsError, OSError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        found = [find_odd_hole(g), find_antihole(g), find_prism(g)]
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    for name, witness in zip(("odd-hole", "antihole", "prism"), found):
        if witness is None:
            print(f"{name}: none")
        else:
            print(f"{name}: {' '.join(str(v + 1) for v in witness.vertices)}")
    print(f"artemis: {'yes' if all(w is None for w in found) else 'no'}")
    return EXIT_OK


def _cmd_generate(args: argparse.Namespace) -> int:
    try:
        g = generate(args.family, args.n, args.density, args.seed)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    comment = (f"family={args.family} n={args.n} density={args.density} "
               f"seed={args.seed}")
    sys.stdout.write(write_dimacs(g, comments=[comment]))
    return EXIT_OK


def _cmd_bench(args: argparse.Namespace) -> int:
    sizes = sorted(int(s) for s in args.sizes.split(","))
    result = bench(args.family, sizes, args.seed, density=DEFAULT_BENCH_DENSITY)
    print(result.table())
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="artemis-color",
        description="Optimal coloring of Artemis graphs by even-pair contraction.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_color = sub.add_parser("color", help="color a DIMACS graph optimally")
    p_color.add_argument("file", metavar="FILE", help="DIMACS .col file, or - for stdin")
    p_color.add_argument("--verify", action="store_true",
                         help="cross-check the run with the brute-force oracles "
                              "(full checks only within the oracle budget)")
    p_color.add_argument("--trace-json", metavar="PATH", default=None,
                         help="write the contraction trace as JSON")
    p_color.set_defaults(func=_cmd_color)

    p_detect = sub.add_parser("detect", help="run the three structure detectors")
    p_detect.add_argument("file", metavar="FILE", help="DIMACS .col file, or - for stdin")
    p_detect.set_defaults(func=_cmd_detect)

    p_gen = sub.add_parser("generate", help="emit a test instance as DIMACS")
    p_gen.add_argument("--family", required=True,
                       choices=("chordal", "bipartite", "filtered-random"))
    p_gen.add_argument("--n", type=int, required=True)
    p_gen.add_argument("--density", type=float, required=True)
    p_gen.add_argument("--seed", type=int, required=True)
    p_gen.set_defaults(func=_cmd_generate)

    p_bench = sub.add_parser("bench", help="operation-count scaling across sizes")
    p_bench.add_argument("--family", required=True,
                         choices=("chordal", "bipartite", "filtered-random"))
    p_bench.add_argument("--sizes", required=True,
                         help="comma-separated instance sizes, e.g. 50,100,200,400")
    p_bench.add_argument("--seed", type=int, required=True)
    p_bench.set_defaults(func=_cmd_bench)

    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
