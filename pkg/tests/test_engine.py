import pytest

from artemis_color import (
    Coloring,
    ColoringError,
    ContractionTrace,
    DisjointCliques,
    MaximalInteresting,
    OpCounters,
    bipartite,
    brute_maximal_interesting_check,
    brute_minimal_outer_path_check,
    chordal,
    chromatic_number_exact,
    color_artemis,
    common_complete,
    contract,
    filtered_random,
    find_even_pair,
    find_interesting,
    find_outer_path,
    find_special_even_pair,
    greedy_color_cliques,
    is_clique,
    is_even_pair_exact,
    is_interesting_set,
    is_proper,
    is_special_even_pair_exact,
    lift_coloring,
    max_clique_exact,
    outer_path_exists_criterion,
)

from conftest import complete_graph, cycle_graph, k3_plus_k2, path_graph


def artemis_samples(count_per_size, sizes=range(4, 11)):
    makers = (chordal, bipartite, filtered_random)
    for n in sizes:
        for k in range(count_per_size):
            density = (0.2, 0.35, 0.5, 0.65, 0.8)[k % 5]
            yield makers[k % 3](n, density, n * 997 + k)


# --- find_interesting -------------------------------------------------------

def test_find_interesting_disjoint_cliques():
    res = find_interesting(k3_plus_k2())
    assert res == DisjointCliques((frozenset({0, 1, 2}), frozenset({3, 4})))


def test_find_interesting_p4():
    res = find_interesting(path_graph(4))
    assert res == MaximalInteresting(frozenset({1}), frozenset({0, 2}))


def test_find_interesting_c6():
    res = find_interesting(cycle_graph(6))
    assert res == MaximalInteresting(frozenset({1}), frozenset({0, 2}))


def test_find_interesting_c4_grows_past_first_seed():
    res = find_interesting(cycle_graph(4))
    assert res == MaximalInteresting(frozenset({1, 3}), frozenset({0, 2}))
    assert brute_maximal_interesting_check(cycle_graph(4), {1, 3})


def _all_interesting_supersets(g, tset):
    # Fully independent maximality route: enumerate every vertex subset.
    from itertools import combinations

    verts = list(g.vertices)
    for size in range(len(tset) + 1, g.n + 1):
        for cand in combinations(verts, size):
            cand = set(cand)
            if tset < cand and is_interesting_set(g, cand):
                return cand
    return None


def test_find_interesting_outputs_are_maximal():
    for g in artemis_samples(6, sizes=range(4, 9)):
        res = find_interesting(g)
        if isinstance(res, DisjointCliques):
            assert all(is_clique(g, part) for part in res.cliques)
            continue
        assert is_interesting_set(g, res.tset)
        assert res.cset == frozenset(common_complete(g, res.tset))
        assert not is_clique(g, res.cset)
        assert brute_maximal_interesting_check(g, res.tset)
        assert _all_interesting_supersets(g, set(res.tset)) is None


# --- find_outer_path --------------------------------------------------------

def test_find_outer_path_c6():
    path = find_outer_path(cycle_graph(6), frozenset({1}), frozenset({0, 2}))
    assert path.vertices == (0, 5, 4, 3, 2)
    assert path.length == 4 and path.interior == (5, 4, 3)


def test_find_outer_path_p4_none():
    assert find_outer_path(path_graph(4), frozenset({1}), frozenset({0, 2})) is None
    assert not outer_path_exists_criterion(path_graph(4), {1}, {0, 2})


def test_find_outer_path_c4_after_find_interesting():
    g = cycle_graph(4)
    res = find_interesting(g)
    assert find_outer_path(g, res.tset, res.cset) is None


def test_find_outer_path_skips_clique_boundary_component():
    # vertex 3 hangs off the complete set through a clique boundary, so its
    # component is searched first, marked, and abandoned; the path comes from
    # the second component
    from artemis_color import new_graph

    g = new_graph(7, [(0, 1), (1, 2), (2, 3), (2, 4), (4, 5), (5, 6), (6, 0)])
    res = find_interesting(g)
    assert res == MaximalInteresting(frozenset({1}), frozenset({0, 2}))
    path = find_outer_path(g, res.tset, res.cset)
    assert path.vertices == (0, 6, 5, 4, 2)
    assert brute_minimal_outer_path_check(g, res.tset, res.cset, path)
    assert find_even_pair(g, res.tset, res.cset, path) == (0, 2)
    assert is_even_pair_exact(g, 0, 2)


def test_outer_paths_verify_against_brute_force():
    for g in artemis_samples(6, sizes=range(4, 10)):
        res = find_interesting(g)
        if isinstance(res, DisjointCliques):
            continue
        path = find_outer_path(g, res.tset, res.cset)
        if path is None:
            assert not outer_path_exists_criterion(g, res.tset, res.cset)
            continue
        assert path.length % 2 == 0 and path.length >= 4
        assert brute_minimal_outer_path_check(g, res.tset, res.cset, path)


# --- find_even_pair ---------------------------------------------------------

def test_find_even_pair_c6():
    g = cycle_graph(6)
    pair = find_even_pair(g, frozenset({1}), frozenset({0, 2}),
                          (0, 5, 4, 3, 2))
    assert pair == (0, 2)
    assert is_even_pair_exact(g, 0, 2)


def test_find_even_pair_c8():
    g = cycle_graph(8)
    res = find_interesting(g)
    path = find_outer_path(g, res.tset, res.cset)
    assert path.vertices == (0, 7, 6, 5, 4, 3, 2)
    assert find_even_pair(g, res.tset, res.cset, path) == (0, 2)
    assert is_even_pair_exact(g, 0, 2)


def test_outer_path_endpoints_land_in_their_classes():
    # x always qualifies for the first endpoint class and y for the second.
    for g in artemis_samples(6, sizes=range(5, 11)):
        res = find_interesting(g)
        if isinstance(res, DisjointCliques):
            continue
        path = find_outer_path(g, res.tset, res.cset)
        if path is None:
            continue
        x, v, w, y = path.vertices[0], path.vertices[1], path.vertices[-2], path.vertices[-1]
        aside = (g.neighbor_set(v) & res.cset) - g.neighbor_set(y)
        bside = (g.neighbor_set(w) & res.cset) - g.neighbor_set(x)
        assert x in aside and y in bside


# --- find_special_even_pair -------------------------------------------------

def test_special_even_pair_examples():
    assert isinstance(find_special_even_pair(k3_plus_k2()), DisjointCliques)
    assert find_special_even_pair(cycle_graph(6)) == (0, 2)
    assert find_special_even_pair(path_graph(4)) == (0, 2)
    assert is_even_pair_exact(path_graph(4), 0, 2)


def test_special_even_pairs_check_out_exactly():
    for g in artemis_samples(5):
        res = find_special_even_pair(g)
        if isinstance(res, DisjointCliques):
            continue
        a, b = res
        assert is_even_pair_exact(g, a, b)
        assert is_special_even_pair_exact(g, a, b)


def test_chain_depth_recorded():
    counters = OpCounters()
    find_special_even_pair(path_graph(4), counters=counters)
    assert counters.chain_depths == [2]  # no outer path at the top level
    assert len(counters.per_call) == 1 and counters.per_call[0] > 0


# --- coloring driver --------------------------------------------------------

def test_color_complete_graph():
    for n in (1, 4, 7):
        coloring, trace = color_artemis(complete_graph(n))
        assert coloring.num_colors == n and not trace.steps


def test_color_c6():
    g = cycle_graph(6)
    coloring, trace = color_artemis(g)
    assert coloring.num_colors == 2 == chromatic_number_exact(g)
    assert len(trace.steps) <= 4
    assert is_proper(g, coloring)


def test_color_p4():
    coloring, _ = color_artemis(path_graph(4))
    assert coloring.num_colors == 2


def test_color_empty_graph():
    from artemis_color import new_graph

    coloring, trace = color_artemis(new_graph(0, []))
    assert coloring == Coloring((), 0) and not trace.steps


def test_pipeline_works_without_bitmask_adjacency():
    # above the bitset threshold adjacency falls back to set membership;
    # force that path on a small instance and compare against the normal one
    from artemis_color import new_graph

    reference = chordal(15, 0.5, 77)
    plain = new_graph(15, reference.edges(), bitset_threshold=0)
    assert not plain.has_masks and reference.has_masks
    ref_coloring, ref_trace = color_artemis(reference)
    coloring, trace = color_artemis(plain)
    assert coloring == ref_coloring
    assert [(s.a, s.b) for s in trace.steps] == [(s.a, s.b) for s in ref_trace.steps]
    assert is_proper(plain, coloring)


def test_coloring_is_optimal_on_samples():
    for g in artemis_samples(4):
        coloring, trace = color_artemis(g)
        assert is_proper(g, coloring)
        assert coloring.num_colors == chromatic_number_exact(g) == max_clique_exact(g)
        assert len(trace.steps) <= max(0, g.n - 1)


# --- greedy residue coloring and lifting ------------------------------------

def test_greedy_color_cliques():
    coloring = greedy_color_cliques([{0, 1, 2}, {3, 4}])
    assert coloring.colors == (0, 1, 2, 0, 1) and coloring.num_colors == 3
    assert greedy_color_cliques([{0}]) == Coloring((0,), 1)
    assert greedy_color_cliques([]) == Coloring((), 0)


def test_lift_empty_trace_is_identity():
    coloring = Coloring((0, 1, 0), 2)
    assert lift_coloring(ContractionTrace(original_n=3), coloring) == coloring


def test_lift_single_step_copies_color_to_both_endpoints():
    g = path_graph(4)
    merged, step = contract(g, 0, 2)  # merged graph is the star 1 - 0 - 2
    trace = ContractionTrace(original_n=4)
    trace.append(step)
    residue = Coloring((0, 1, 1), 2)
    lifted = lift_coloring(trace, residue, final_graph=merged, original_graph=g)
    assert lifted.colors[0] == lifted.colors[2]
    assert lifted.num_colors == 2 and is_proper(g, lifted)


def test_lift_rejects_improper_input():
    g = path_graph(4)
    merged, step = contract(g, 0, 2)
    trace = ContractionTrace(original_n=4)
    trace.append(step)
    bad = Coloring((0, 0, 1), 2)  # 0 and 1 are adjacent in the merged star
    with pytest.raises(ColoringError):
        lift_coloring(trace, bad, final_graph=merged)


def test_coloring_type_rejects_unused_colors():
    with pytest.raises(ColoringError):
        Coloring((0, 2), 3)


def test_lift_from_driver_is_proper():
    g = cycle_graph(6)
    coloring, trace = color_artemis(g)
    assert is_proper(g, coloring)
    assert coloring.colors[0] == coloring.colors[2]  # first contraction merged them
