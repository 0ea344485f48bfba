import pytest

from artemis_color import (
    ContractionStep,
    ContractionTrace,
    GraphError,
    bfs_from_to,
    common_complete,
    complement,
    components,
    contract,
    induced,
    is_clique,
    is_simplicial,
    new_graph,
)
from artemis_color.oracles import find_prism

from conftest import complete_graph, cycle_graph, path_graph, prism_graph


def test_new_graph_path():
    g = path_graph(4)
    assert g.n == 4 and g.m == 3
    assert g.neighbors(1) == (0, 2)


def test_new_graph_single_vertex():
    g = new_graph(1, [])
    assert g.n == 1 and g.m == 0


def test_new_graph_prism():
    assert prism_graph().m == 9


def test_new_graph_dedupes():
    g = new_graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(1, 1)], [(-1, 0)]])
def test_new_graph_rejects_bad_edges(edges):
    with pytest.raises(GraphError):
        new_graph(3, edges)


def test_contract_p4():
    g, step = contract(path_graph(4), 0, 2)
    assert g.n == 3 and g.m == 2
    assert sorted(g.neighbor_set(step.merged)) == [1, 2]
    assert step.vertex_map[0] == step.vertex_map[2] == step.merged == 0


def test_contract_c6_creates_four_hole():
    g, step = contract(cycle_graph(6), 0, 2)
    assert g.n == 5
    old_to_new = step.vertex_map
    assert g.neighbor_set(step.merged) == {old_to_new[1], old_to_new[3], old_to_new[5]}
    hole = [step.merged, old_to_new[3], old_to_new[4], old_to_new[5]]
    for i in range(4):
        assert g.adjacent(hole[i], hole[(i + 1) % 4])
    assert not g.adjacent(hole[0], hole[2]) and not g.adjacent(hole[1], hole[3])


def test_contract_isolated_pair():
    g, _ = contract(new_graph(2, []), 0, 1)
    assert g.n == 1 and g.m == 0


def test_contract_rejects_adjacent():
    with pytest.raises(GraphError):
        contract(path_graph(2), 0, 1)


def test_contract_lifts_any_proper_coloring():
    # Copying the merged vertex's color back to both endpoints keeps any
    # proper coloring proper, whenever the endpoints were non-adjacent.
    import random

    from artemis_color import random_graph

    rng = random.Random(5)
    for _ in range(50):
        g = random_graph(8, 0.4, rng.randrange(10**6))
        nonadj = [(u, v) for u in range(8) for v in range(u + 1, 8)
                  if not g.adjacent(u, v)]
        if not nonadj:
            continue
        a, b = nonadj[rng.randrange(len(nonadj))]
        merged, step = contract(g, a, b)
        colors = {v: i for i, v in enumerate(range(merged.n))}  # rainbow is proper
        lifted = [colors[step.vertex_map[v]] for v in range(g.n)]
        assert all(lifted[u] != lifted[v] for u, v in g.edges())


def test_complement_k3():
    assert complement(complete_graph(3)).m == 0


def test_complement_c5_is_five_cycle():
    cc = complement(cycle_graph(5))
    assert cc.m == 5 and all(cc.degree(v) == 2 for v in cc.vertices)
    assert len(components(cc)) == 1


def test_complement_c6_is_prism():
    assert find_prism(complement(cycle_graph(6))) is not None


def test_complement_involution():
    g = new_graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4), (1, 4)])
    assert complement(complement(g)) == g


def test_induced():
    sub, old_ids = induced(cycle_graph(6), {0, 1, 2})
    assert old_ids == (0, 1, 2)
    assert sub.n == 3 and sub.m == 2 and sub.neighbors(1) == (0, 2)
    g = path_graph(5)
    same, _ = induced(g, g.vertices)
    assert same == g
    empty, ids = induced(g, set())
    assert empty.n == 0 and ids == ()


def test_common_complete():
    assert common_complete(path_graph(4), {1}) == {0, 2}
    assert common_complete(complete_graph(4), {0}) == {1, 2, 3}
    assert common_complete(cycle_graph(6), {0, 3}) == set()
    with pytest.raises(GraphError):
        common_complete(path_graph(3), set())


def test_common_complete_never_meets_the_set():
    import random

    from artemis_color import random_graph

    rng = random.Random(11)
    for _ in range(30):
        g = random_graph(9, 0.5, rng.randrange(10**6))
        tset = set(rng.sample(range(9), rng.randrange(1, 5)))
        assert not common_complete(g, tset) & tset


def test_is_clique():
    g = path_graph(4)
    assert is_clique(g, set())
    assert is_clique(g, {2})
    assert not is_clique(g, {0, 2})
    assert is_clique(complete_graph(3), {0, 1, 2})


def test_components():
    assert components(cycle_graph(6), {3, 4, 5}) == [{3, 4, 5}]
    from conftest import k3_plus_k2

    assert components(k3_plus_k2()) == [{0, 1, 2}, {3, 4}]
    assert components(path_graph(3), set()) == []


def test_components_cover_the_set():
    import random

    from artemis_color import random_graph

    rng = random.Random(3)
    for _ in range(30):
        g = random_graph(10, 0.25, rng.randrange(10**6))
        s = set(rng.sample(range(10), rng.randrange(0, 11)))
        parts = components(g, s)
        assert sum(len(p) for p in parts) == len(s)
        assert set().union(*parts) == s if parts else not s


def test_bfs_from_to_c6():
    g = cycle_graph(6)
    forest = bfs_from_to(g, set(range(6)) - {1}, {3}, {0, 2})
    assert forest.order == [3, 4, 5]
    assert forest.reached_targets == {0, 2}
    assert forest.parent[2] == 3 and forest.parent[0] == 5
    assert forest.path_from_root(0) == [3, 4, 5, 0]


def test_bfs_from_to_empty_targets_is_plain_bfs():
    from conftest import k3_plus_k2

    g = k3_plus_k2()
    forest = bfs_from_to(g, g.vertices, {0}, set())
    assert set(forest.order) == {0, 1, 2}


def test_bfs_from_to_targets_are_leaves():
    g = path_graph(2)
    forest = bfs_from_to(g, {0, 1}, {0}, {1})
    assert forest.reached_targets == {1}
    assert 1 not in forest.parent.values()  # no child hangs off the target


def test_bfs_from_to_validates_inputs():
    g = path_graph(3)
    with pytest.raises(GraphError):
        bfs_from_to(g, {0, 1}, {0}, {2})
    with pytest.raises(GraphError):
        bfs_from_to(g, {0, 1, 2}, {0, 1}, {1})


def test_is_simplicial():
    assert is_simplicial(path_graph(4), 0)
    assert not is_simplicial(path_graph(3), 1)
    assert all(is_simplicial(complete_graph(4), v) for v in range(4))


def test_trace_rejects_overlong_and_mismatched_steps():
    g = path_graph(3)
    _, step = contract(g, 0, 2)
    trace = ContractionTrace(original_n=3)
    trace.append(step)
    with pytest.raises(GraphError):
        trace.append(step)  # wrong vertex range now
    short = ContractionTrace(original_n=2)
    short.append(ContractionStep(a=0, b=1, merged=0, vertex_map=(0, 0)))
    assert short.current_n == 1
    with pytest.raises(GraphError):
        # a trace never holds more than n-1 contractions
        short.append(ContractionStep(a=0, b=1, merged=0, vertex_map=(0, 0)))
