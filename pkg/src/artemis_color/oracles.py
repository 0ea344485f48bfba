"""Exponential-time reference implementations of every structural definition.

These are the trusted side of the dual-route checks: subset enumeration and
branch-and-bound at desk scale, used to validate the fast pipeline instance by
instance.  Each entry point refuses inputs beyond its budget instead of
silently running forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .graphs import (
    Graph,
    GraphError,
    common_complete,
    components,
    contract,
    is_clique,
    iter_bits,
    mask_of,
)

ODD_HOLE = "odd_hole"
ANTIHOLE = "antihole"
PRISM = "prism"


@dataclass(frozen=True)
class OracleBudget:
    """Caps for the brute-force routines.

    ``max_n`` bounds the subset-enumeration detectors, ``max_bb_n`` the
    branch-and-bound chromatic number / clique number, and ``max_paths`` the
    number of chordless paths enumerated before refusing.
    """

    max_n: int = 12
    max_bb_n: int = 16
    max_paths: int = 10**6


DEFAULT_BUDGET = OracleBudget()


class BudgetExceeded(RuntimeError):
    """The input is larger than the oracle is willing to handle."""


@dataclass(frozen=True)
class StructureWitness:
    """A vertex sequence exhibiting a forbidden structure.

    For holes and antiholes the vertices are in cycle order (cycle order in
    the complement for antiholes); for prisms they are the sorted subset.
    """

    kind: str
    vertices: tuple[int, ...]


def _require(value: int, cap: int, what: str) -> None:
    if value > cap:
        raise BudgetExceeded(f"{what}: size {value} exceeds the budget of {cap}")


def _subsets_lex(n: int, min_size: int) -> Iterator[tuple[int, ...]]:
    """All subsets of 0..n-1 with at least min_size elements, in lexicographic
    order of their sorted tuples (a prefix precedes its extensions)."""
    prefix: list[int] = []

    def walk(start: int) -> Iterator[tuple[int, ...]]:
        for v in range(start, n):
            prefix.append(v)
            if len(prefix) >= min_size:
                yield tuple(prefix)
            yield from walk(v + 1)
            prefix.pop()

    yield from walk(0)


def _cycle_order(masks: Sequence[int], subset: tuple[int, ...]) -> tuple[int, ...] | None:
    """Cycle order of the subset if it induces a chordless cycle, else None."""
    smask = mask_of(subset)
    for v in subset:
        if (masks[v] & smask).bit_count() != 2:
            return None
    start = subset[0]
    first_nbrs = sorted(iter_bits(masks[start] & smask))
    order = [start]
    prev = start
    cur = first_nbrs[0]
    while cur != start:
        order.append(cur)
        nxt = [w for w in iter_bits(masks[cur] & smask) if w != prev]
        prev, cur = cur, nxt[0]
    if len(order) != len(subset):
        return None  # two-regular but disconnected: a union of shorter cycles
    return tuple(order)


def find_odd_hole(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> StructureWitness | None:
    """First chordless odd cycle of length at least five, by subset enumeration."""
    _require(g.n, budget.max_n, "odd-hole detector")
    masks = [g.mask(v) for v in g.vertices]
    for subset in _subsets_lex(g.n, 5):
        if len(subset) % 2 == 0:
            continue
        order = _cycle_order(masks, subset)
        if order is not None:
            return StructureWitness(ODD_HOLE, order)
    return None


def find_antihole(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> StructureWitness | None:
    """First antihole of length at least six: a subset inducing a chordless
    cycle in the complement.  Length-five antiholes are self-complementary
    five-holes and belong to the odd-hole detector."""
    _require(g.n, budget.max_n, "antihole detector")
    full = (1 << g.n) - 1
    co_masks = [full & ~g.mask(v) & ~(1 << v) for v in g.vertices]
    for subset in _subsets_lex(g.n, 6):
        order = _cycle_order(co_masks, subset)
        if order is not None:
            return StructureWitness(ANTIHOLE, order)
    return None


def _prism_paths_ok(nbrs_in: dict[int, set[int]], tri_a: tuple[int, ...],
                    tri_b: tuple[int, ...], subset: tuple[int, ...]) -> bool:
    """After deleting the two triangles' edges, exactly three disjoint paths
    must remain, each joining one vertex of tri_a to one of tri_b."""
    tri_a_set, tri_b_set = set(tri_a), set(tri_b)
    stripped = {}
    for v in subset:
        drop = tri_a_set if v in tri_a_set else tri_b_set if v in tri_b_set else set()
        stripped[v] = nbrs_in[v] - drop
    remaining = set(subset)
    paths = 0
    while remaining:
        seed = min(remaining)
        comp = {seed}
        stack = [seed]
        while stack:
            u = stack.pop()
            for w in stripped[u]:
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        remaining -= comp
        edge_count = sum(len(stripped[v] & comp) for v in comp) // 2
        if edge_count != len(comp) - 1:
            return False  # a cycle survived
        leaves = [v for v in comp if len(stripped[v] & comp) == 1]
        if len(comp) == 1 or len(leaves) != 2:
            return False
        if not ((leaves[0] in tri_a_set) ^ (leaves[1] in tri_a_set)):
            return False
        if (set(comp) - {leaves[0], leaves[1]}) & (tri_a_set | tri_b_set):
            return False
        paths += 1
    return paths == 3


def _prism_check(g: Graph, subset: tuple[int, ...]) -> bool:
    k = len(subset)
    smask = mask_of(subset)
    nbrs_in = {v: set(iter_bits(g.mask(v) & smask)) for v in subset}
    if sum(len(s) for s in nbrs_in.values()) // 2 != k + 3:
        return False
    deg3 = [v for v in subset if len(nbrs_in[v]) == 3]
    if len(deg3) != 6:
        return False
    if any(len(nbrs_in[v]) != 2 for v in subset if v not in deg3):
        return False
    anchor = deg3[0]
    rest = [v for v in deg3 if v != anchor]
    for two in combinations(rest, 2):
        tri_a = (anchor,) + two
        tri_b = tuple(v for v in deg3 if v not in tri_a)
        if all(w in nbrs_in[v] for v, w in combinations(tri_a, 2)) and \
           all(w in nbrs_in[v] for v, w in combinations(tri_b, 2)):
            if _prism_paths_ok(nbrs_in, tri_a, tri_b, subset):
                return True
    return False


def find_prism(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> StructureWitness | None:
    """First vertex subset inducing a prism: two disjoint triangles joined by
    three vertex-disjoint paths and nothing else."""
    _require(g.n, budget.max_n, "prism detector")
    for subset in _subsets_lex(g.n, 6):
        if _prism_check(g, subset):
            return StructureWitness(PRISM, subset)
    return None


def is_artemis(g: Graph, budget: OracleBudget = DEFAULT_BUDGET,
               ) -> tuple[bool, StructureWitness | None]:
    """Class membership: no odd hole, no antihole of length five or more, no
    prism.  Returns the verdict with the first witness found, if any."""
    witness = find_odd_hole(g, budget)
    if witness is None:
        witness = find_antihole(g, budget)
    if witness is None:
        witness = find_prism(g, budget)
    return witness is None, witness


def enumerate_chordless_paths(g: Graph, x: int, y: int,
                              budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All chordless paths from x to y, depth-first with the prune that a new
    vertex may only be adjacent to the current last path vertex."""
    _require(g.n, budget.max_n, "chordless-path enumeration")
    if x == y or not (0 <= x < g.n and 0 <= y < g.n):
        raise GraphError("chordless paths need two distinct vertices in range")
    result: list[tuple[int, ...]] = []
    path = [x]

    def extend(forbid: int) -> None:
        last = path[-1]
        for w in g.neighbors(last):
            if forbid >> w & 1:
                continue
            if w == y:
                if len(result) >= budget.max_paths:
                    raise BudgetExceeded(
                        f"more than {budget.max_paths} chordless paths")
                result.append(tuple(path) + (y,))
                continue
            path.append(w)
            extend(forbid | g.mask(last) | 1 << w)
            path.pop()

    extend(1 << x)
    return result


def is_even_pair_exact(g: Graph, x: int, y: int,
                       budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """True when every chordless path between the non-adjacent pair has even
    length; vacuously true when no path exists."""
    if g.adjacent(x, y):
        raise GraphError("even pairs are defined for non-adjacent vertices")
    paths = enumerate_chordless_paths(g, x, y, budget)
    return all((len(p) - 1) % 2 == 0 for p in paths)


def is_special_even_pair_exact(g: Graph, x: int, y: int,
                               budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """An even pair whose contraction leaves a prism-free graph."""
    if not is_even_pair_exact(g, x, y, budget):
        return False
    merged, _ = contract(g, x, y)
    return find_prism(merged, budget) is None


def max_clique_exact(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Largest clique size by branch and bound over candidate bitmasks."""
    _require(g.n, budget.max_bb_n, "max-clique search")
    if g.n == 0:
        return 0
    masks = [g.mask(v) for v in g.vertices]
    best = 0

    def expand(cand: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(cand & masks[v], size + 1)

    expand((1 << g.n) - 1, 0)
    return best


def chromatic_number_exact(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> int:
    """Smallest color count admitting a proper coloring, by backtracking with
    a clique lower bound."""
    _require(g.n, budget.max_bb_n, "chromatic-number search")
    if g.n == 0:
        return 0
    lower = max_clique_exact(g, budget)
    order = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    n = g.n

    def colorable(k: int) -> bool:
        assigned: dict[int, int] = {}

        def place(i: int) -> bool:
            if i == n:
                return True
            v = order[i]
            used_new = max(assigned.values(), default=-1) + 1
            taken = {assigned[w] for w in g.neighbors(v) if w in assigned}
            for c in range(min(used_new + 1, k)):
                if c in taken:
                    continue
                assigned[v] = c
                if place(i + 1):
                    return True
                del assigned[v]
            return False

        return place(0)

    for k in range(lower, n + 1):
        if colorable(k):
            return k
    return n


def is_interesting_set(g: Graph, tset: Iterable[int]) -> bool:
    """Nonempty, connected in the complement, and with a complete neighborhood
    that is not a clique."""
    members = set(tset)
    if not members:
        return False
    seed = min(members)
    seen = {seed}
    stack = [seed]
    while stack:
        u = stack.pop()
        for w in members - g.neighbor_set(u):
            if w != u and w not in seen:
                seen.add(w)
                stack.append(w)
    if seen != members:
        return False
    return not is_clique(g, common_complete(g, members))


def brute_maximal_interesting_check(g: Graph, tset: Iterable[int],
                                    budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """T is interesting and no outside vertex has a non-clique neighborhood
    inside T's complete set (which would let T grow)."""
    _require(g.n, budget.max_n, "maximal-interesting check")
    members = set(tset)
    if not is_interesting_set(g, members):
        return False
    complete = common_complete(g, members)
    outside = set(g.vertices) - members - complete
    return all(is_clique(g, g.neighbor_set(u) & complete) for u in outside)


def enumerate_outer_paths(g: Graph, tset: Iterable[int], cset: Iterable[int],
                          budget: OracleBudget = DEFAULT_BUDGET) -> list[tuple[int, ...]]:
    """All T-outer paths: chordless, both endpoints complete, at least one
    interior vertex, interior disjoint from T and the complete set.  Each path
    is listed once, with its smaller endpoint first."""
    _require(g.n, budget.max_n, "outer-path enumeration")
    tset = set(tset)
    cset = set(cset)
    interior_pool = set(g.vertices) - tset - cset
    result: list[tuple[int, ...]] = []
    for start in sorted(cset):
        path = [start]

        def extend(forbid: int) -> None:
            last = path[-1]
            for w in g.neighbors(last):
                if forbid >> w & 1:
                    continue
                if w in cset:
                    if w > start and len(path) >= 2:
                        if len(result) >= budget.max_paths:
                            raise BudgetExceeded(
                                f"more than {budget.max_paths} outer paths")
                        result.append(tuple(path) + (w,))
                    continue
                if w not in interior_pool:
                    continue
                path.append(w)
                extend(forbid | g.mask(last) | 1 << w)
                path.pop()

        extend(1 << start)
    return result


def brute_minimal_outer_path_check(g: Graph, tset: Iterable[int], cset: Iterable[int],
                                   path: Sequence[int] | "object",
                                   budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """The path is a T-outer path of even length at least four and no other
    T-outer path has its interior strictly inside this one's."""
    verts = tuple(getattr(path, "vertices", path))
    tset = set(tset)
    cset = set(cset)
    if len(verts) < 3 or len(set(verts)) != len(verts):
        return False
    if verts[0] not in cset or verts[-1] not in cset:
        return False
    interior = set(verts[1:-1])
    if interior & (tset | cset):
        return False
    for i in range(len(verts) - 1):
        if not g.adjacent(verts[i], verts[i + 1]):
            return False
    for i in range(len(verts)):
        for j in range(i + 2, len(verts)):
            if g.adjacent(verts[i], verts[j]):
                return False
    length = len(verts) - 1
    if length % 2 != 0 or length < 4:
        return False
    for other in enumerate_outer_paths(g, tset, cset, budget):
        if set(other[1:-1]) < interior:
            return False
    return True


def outer_path_exists_criterion(g: Graph, tset: Iterable[int],
                                cset: Iterable[int]) -> bool:
    """Existence test for T-outer paths: some component of the leftover
    vertices meets the complete set in a non-clique."""
    tset = set(tset)
    cset = set(cset)
    for comp in components(g, set(g.vertices) - tset - cset):
        boundary: set[int] = set()
        for v in comp:
            boundary |= g.neighbor_set(v)
        if not is_clique(g, boundary & cset):
            return True
    return False


def fonlupt_uhry_check(g: Graph, x: int, y: int,
                       budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    """Contracting an even pair changes neither the chromatic number nor the
    largest clique size; checked exactly on both sides."""
    _require(g.n, budget.max_bb_n, "contraction invariance check")
    merged, _ = contract(g, x, y)
    return (chromatic_number_exact(g, budget) == chromatic_number_exact(merged, budget)
            and max_clique_exact(g, budget) == max_clique_exact(merged, budget))
