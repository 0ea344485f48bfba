import json

import pytest

from artemis_color import Coloring, color_artemis, generate
from artemis_color.cli import main
from artemis_color.dimacs import DimacsError, parse_dimacs, write_coloring, write_dimacs

from conftest import cycle_graph


# --- parsing -----------------------------------------------------------------

def test_parse_p3():
    g = parse_dimacs("p edge 3 2\ne 1 2\ne 2 3")
    assert g.n == 3 and g.m == 2 and g.adjacent(0, 1) and g.adjacent(1, 2)


def test_parse_comment_and_k1():
    g = parse_dimacs("c x\np edge 1 0")
    assert g.n == 1 and g.m == 0


def test_parse_out_of_range():
    with pytest.raises(DimacsError, match="line 2"):
        parse_dimacs("p edge 2 1\ne 1 3")


def test_parse_edge_before_p():
    with pytest.raises(DimacsError, match="line 1"):
        parse_dimacs("e 1 2\np edge 2 1")


def test_parse_missing_p():
    with pytest.raises(DimacsError, match="missing"):
        parse_dimacs("c nothing here")


def test_parse_self_loop():
    with pytest.raises(DimacsError, match="self-loop"):
        parse_dimacs("p edge 2 1\ne 2 2")


def test_parse_warnings():
    warnings = []
    g = parse_dimacs("p edge 3 5\ne 1 2\ne 2 1\ne 2 3",
                     on_warning=warnings.append)
    assert g.m == 2
    assert any("duplicate" in w for w in warnings)
    assert any("declares 5" in w for w in warnings)


def test_round_trip():
    g = generate("chordal", 11, 0.5, 4)
    assert parse_dimacs(write_dimacs(g)) == g


# --- coloring output ---------------------------------------------------------

def test_write_coloring_k1():
    assert write_coloring(Coloring((0,), 1)) == "s 1\nv 1 1\n"


def test_write_coloring_empty():
    assert write_coloring(Coloring((), 0)) == "s 0\n"


def test_write_coloring_c6():
    coloring, _ = color_artemis(cycle_graph(6))
    text = write_coloring(coloring)
    lines = text.splitlines()
    assert lines[0] == "s 2" and len(lines) == 7


# --- command line ------------------------------------------------------------

@pytest.fixture
def chordal_file(tmp_path):
    target = tmp_path / "g.col"
    target.write_text(write_dimacs(generate("chordal", 10, 0.5, 3)))
    return target


def test_cli_color(chordal_file, capsys):
    assert main(["color", str(chordal_file)]) == 0
    out = capsys.readouterr().out
    assert out.startswith("s ") and out.count("\nv ") == 10


def test_cli_color_verify_ok(chordal_file):
    assert main(["color", "--verify", str(chordal_file)]) == 0


def test_cli_color_verify_rejects_c5(tmp_path, capsys):
    bad = tmp_path / "c5.col"
    bad.write_text(write_dimacs(cycle_graph(5)))
    assert main(["color", "--verify", str(bad)]) == 1
    assert "verify:" in capsys.readouterr().err


def test_cli_color_parse_error(tmp_path):
    broken = tmp_path / "broken.col"
    broken.write_text("p edge 2 1\ne 1 9\n")
    assert main(["color", str(broken)]) == 2


def test_cli_color_verify_over_budget_note(tmp_path, capsys):
    big = tmp_path / "big.col"
    big.write_text(write_dimacs(generate("chordal", 14, 0.4, 1)))
    assert main(["color", "--verify", str(big)]) == 0
    assert "exceeds the oracle budget" in capsys.readouterr().err


def test_cli_detect(chordal_file, capsys):
    assert main(["detect", str(chordal_file)]) == 0
    out = capsys.readouterr().out
    assert "artemis: yes" in out and out.count(": none") == 3


def test_cli_detect_budget_refusal(tmp_path):
    big = tmp_path / "big.col"
    big.write_text(write_dimacs(generate("chordal", 13, 0.4, 1)))
    assert main(["detect", str(big)]) == 3


def test_cli_generate_deterministic(capsys):
    args = ["generate", "--family", "bipartite", "--n", "9", "--density", "0.5",
            "--seed", "11"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    assert first.startswith("c family=bipartite")


def test_cli_generate_budget_refusal(capsys):
    assert main(["generate", "--family", "filtered-random", "--n", "20",
                 "--density", "0.3", "--seed", "0"]) == 3


def test_cli_trace_json_replays_lift(chordal_file, tmp_path, capsys):
    trace_path = tmp_path / "trace.json"
    assert main(["color", "--trace-json", str(trace_path), str(chordal_file)]) == 0
    stdout = capsys.readouterr().out
    payload = json.loads(trace_path.read_text())
    assert payload["original_n"] == 10
    assert all(step["chain_depth"] >= 1 for step in payload["steps"])

    # replay: color the residue greedily, walk the steps backwards
    n = payload["original_n"] - len(payload["steps"])
    colors = {}
    for part in payload["residue_cliques"]:
        for j, v in enumerate(sorted(part)):
            colors[v] = j
    assignment = [colors[v] for v in range(n)]
    for step in reversed(payload["steps"]):
        merged, a, b = step["merged"], step["a"], step["b"]
        hi = max(a, b)
        previous = []
        for old in range(len(assignment) + 1):
            if old == a or old == b:
                previous.append(assignment[merged])
            else:
                previous.append(assignment[old - 1 if old > hi else old])
        assignment = previous
    expected = [int(line.split()[2]) - 1 for line in stdout.splitlines()[1:]]
    assert assignment == expected


def test_cli_bench_single_size(capsys):
    assert main(["bench", "--family", "chordal", "--sizes", "30", "--seed", "5"]) == 0
    out = capsys.readouterr().out
    assert "slope" not in out and "total" in out
