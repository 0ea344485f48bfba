"""Even-pair contraction coloring for Artemis graphs.

An Artemis graph has no odd hole, no antihole of length five or more and no
prism.  Such graphs are colored optimally by repeatedly contracting a special
even pair (an even pair whose contraction leaves the graph prism-free) until
only disjoint cliques remain, coloring those greedily, and copying colors back
through the contractions.

The pair search works level by level: grow a maximal interesting set T, look
for a minimal T-outer path, and either extract the pair from the path or
recurse into the set of T-complete vertices.  Every nondeterministic choice is
resolved by smallest vertex id.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence, Union

from .graphs import (
    ContractionStep,
    ContractionTrace,
    Graph,
    GraphError,
    bfs_from_to,
    components,
    contract,
)


class NotArtemisError(RuntimeError):
    """A guarantee that holds for Artemis inputs failed; the input is outside the class."""


class ColoringError(ValueError):
    """A coloring violates properness or does not fit the graph it is applied to."""


@dataclass(frozen=True)
class MaximalInteresting:
    """A maximal interesting set and its complete neighborhood.

    ``tset`` is nonempty and connected in the complement; ``cset`` holds the
    vertices adjacent to all of ``tset`` and is not a clique.
    """

    tset: frozenset[int]
    cset: frozenset[int]


@dataclass(frozen=True)
class DisjointCliques:
    """Verdict that the (sub)graph is a disjoint union of cliques."""

    cliques: tuple[frozenset[int], ...]


InterestingSetResult = Union[MaximalInteresting, DisjointCliques]


@dataclass(frozen=True)
class OuterPath:
    """A chordless path whose endpoints are T-complete and whose interior
    avoids both T and the T-complete vertices."""

    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.vertices) < 3:
            raise GraphError("an outer path needs at least one interior vertex")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def interior(self) -> tuple[int, ...]:
        return self.vertices[1:-1]

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]


@dataclass(frozen=True)
class Coloring:
    """Total vertex-to-color map using colors ``0..num_colors-1``, all of them."""

    colors: tuple[int, ...]
    num_colors: int

    def __post_init__(self) -> None:
        used = set(self.colors)
        if self.colors and used != set(range(self.num_colors)):
            raise ColoringError("colors must be exactly 0..num_colors-1, all used")
        if not self.colors and self.num_colors != 0:
            raise ColoringError("an empty graph takes zero colors")


@dataclass
class OpCounters:
    """Basic-operation tallies per pipeline phase.

    One unit is one neighbor-scan step or one pairwise adjacency probe, the
    cost model under which the pipeline is an O(n^2 m) algorithm.  ``per_call``
    and ``chain_depths`` get one entry per special-even-pair search.
    """

    interesting: int = 0
    outer: int = 0
    even_pair: int = 0
    per_call: list[int] = field(default_factory=list)
    chain_depths: list[int] = field(default_factory=list)

    def total(self) -> int:
        return self.interesting + self.outer + self.even_pair


class PipelineObserver:
    """Hooks fired by the pair search and the driver; all no-ops by default.

    Subclasses can cross-check every intermediate structure (used by the
    oracle-backed verify mode).
    """

    def interesting(self, g: Graph, domain: frozenset[int],
                    result: InterestingSetResult) -> None:
        pass

    def outer_path(self, g: Graph, domain: frozenset[int], tset: frozenset[int],
                   cset: frozenset[int], path: OuterPath | None) -> None:
        pass

    def even_pair(self, g: Graph, domain: frozenset[int], tset: frozenset[int],
                  cset: frozenset[int], path: OuterPath, pair: tuple[int, int]) -> None:
        pass

    def bottom_pair(self, g: Graph, domain: frozenset[int],
                    result: DisjointCliques, pair: tuple[int, int]) -> None:
        pass

    def contracted(self, before: Graph, a: int, b: int, after: Graph) -> None:
        pass


_SILENT = PipelineObserver()


def _clique_probe(g: Graph, s: set[int], counters: OpCounters, phase: str) -> bool:
    """Clique test charged one probe per candidate pair examined."""
    size = len(s)
    if size <= 1:
        return True
    ops = 0
    ok = True
    for v in sorted(s):
        ops += size
        if len(g.neighbor_set(v) & s) != size - 1:
            ok = False
            break
    setattr(counters, phase, getattr(counters, phase) + ops)
    return ok


def find_interesting(g: Graph, domain: Iterable[int] | None = None, *,
                     counters: OpCounters | None = None) -> InterestingSetResult:
    """Maximal interesting set of the subgraph on ``domain``, or the clique
    partition when every vertex is simplicial.

    Seed: breadth-first search from the smallest vertex whose degree falls
    short of its component size minus one; the parent of the first vertex met
    at distance two is non-simplicial and starts the set.  Growth: each
    undecided vertex whose neighborhood inside the complete set is a clique is
    shelved for good; otherwise it joins the set and the complete set shrinks
    to its neighbors, re-opening what fell out.
    """
    counters = counters if counters is not None else OpCounters()
    dom = set(g.vertices) if domain is None else set(domain)

    parts = components(g, dom)
    counters.interesting += len(dom) + sum(len(p) for p in parts)
    comp_size = {}
    for part in parts:
        for v in part:
            comp_size[v] = len(part)

    start = None
    for v in sorted(dom):
        deg = len(g.neighbor_set(v) & dom)
        counters.interesting += 1
        if deg < comp_size[v] - 1:
            start = v
            break
    if start is None:
        return DisjointCliques(tuple(frozenset(p) for p in parts))

    # Parent of the first vertex dequeued at distance two: it sees both the
    # start vertex and that vertex, which are non-adjacent, so it is
    # non-simplicial.
    dist = {start: 0}
    parent: dict[int, int] = {}
    queue = deque([start])
    seed = None
    while queue and seed is None:
        u = queue.popleft()
        counters.interesting += g.degree(u)
        for w in g.neighbors(u):
            if w not in dom or w in dist:
                continue
            dist[w] = dist[u] + 1
            parent[w] = u
            if dist[w] == 2:
                seed = parent[w]
                break
            queue.append(w)
    assert seed is not None

    tset = {seed}
    cset = set(g.neighbor_set(seed) & dom)
    undecided = dom - tset - cset
    while undecided:
        u = min(undecided)
        undecided.discard(u)
        cap = g.neighbor_set(u) & cset
        counters.interesting += g.degree(u)
        if _clique_probe(g, cap, counters, "interesting"):
            continue  # shelved: the complete set only shrinks, so this stays a clique
        tset.add(u)
        dropped = cset - g.neighbor_set(u)
        cset &= g.neighbor_set(u)
        undecided |= dropped
        counters.interesting += len(dropped)
    return MaximalInteresting(frozenset(tset), frozenset(cset))


def find_outer_path(g: Graph, tset: Iterable[int], cset: Iterable[int],
                    domain: Iterable[int] | None = None, *,
                    counters: OpCounters | None = None) -> OuterPath | None:
    """Minimal T-outer path for a maximal interesting set, or None.

    One search per component of the vertices outside T and its complete set:
    a breadth-first search that collects the complete vertices it meets as
    leaves.  The met set stays a clique (counter-checked) until some vertex x
    breaks it; a second search from x inside the vertices seen so far, with
    x's met neighbors removed, runs to the first met vertex not adjacent to x.
    The search path between them is the answer.
    """
    counters = counters if counters is not None else OpCounters()
    dom = set(g.vertices) if domain is None else set(domain)
    tset = set(tset)
    cset = set(cset)
    searchable = dom - tset
    unmarked = dom - tset - cset
    while unmarked:
        root = min(unmarked)
        found = _component_search(g, root, searchable, cset, unmarked, counters)
        if found is not None:
            return found
    return None


def _component_search(g: Graph, root: int, searchable: set[int], cset: set[int],
                      unmarked: set[int], counters: OpCounters) -> OuterPath | None:
    seen = {root}
    parent: dict[int, int | None] = {root: None}
    unmarked.discard(root)
    met: list[int] = []        # complete vertices in discovery order
    met_set: set[int] = set()
    met_count: dict[int, int] = {}  # complete vertex -> neighbors already met
    queue = deque([root])
    while queue:
        u = queue.popleft()
        counters.outer += g.degree(u)
        for w in g.neighbors(u):
            if w not in searchable or w in seen:
                continue
            seen.add(w)
            parent[w] = u
            if w in cset:
                if met_count.get(w, 0) != len(met):
                    # w misses someone already met: the met set just stopped
                    # being a clique, and a path between the two sides exists.
                    return _dig_out_path(g, w, met, met_set, seen, cset, counters)
                counters.outer += g.degree(w)
                for z in g.neighbors(w):
                    if z in cset:
                        met_count[z] = met_count.get(z, 0) + 1
                met.append(w)
                met_set.add(w)
            else:
                unmarked.discard(w)
                queue.append(w)
    return None


def _dig_out_path(g: Graph, x: int, met: list[int], met_set: set[int],
                  seen: set[int], cset: set[int], counters: OpCounters) -> OuterPath:
    met_x = {z for z in met if g.adjacent(x, z)}
    counters.outer += len(met)
    targets = met_set - met_x
    allowed = seen - met_x
    parent: dict[int, int | None] = {x: None}
    inner_seen = {x}
    queue = deque([x])
    while queue:
        u = queue.popleft()
        counters.outer += g.degree(u)
        for w in g.neighbors(u):
            if w not in allowed or w in inner_seen:
                continue
            inner_seen.add(w)
            parent[w] = u
            if w in targets:
                path = [w]
                while (p := parent[path[-1]]) is not None:
                    path.append(p)
                path.reverse()
                return OuterPath(tuple(path))
            if w not in cset:
                queue.append(w)
    raise NotArtemisError(
        "outer-path endpoint became unreachable; the input violates the class guarantees")


def find_even_pair(g: Graph, tset: Iterable[int], cset: Iterable[int],
                   path: OuterPath | Sequence[int],
                   domain: Iterable[int] | None = None, *,
                   counters: OpCounters | None = None) -> tuple[int, int]:
    """Special even pair extracted from a minimal T-outer path.

    With the path written x-v-...-w-y, A holds the complete vertices seeing v
    but not y, and B those seeing w but not x.  A vertex of A adjacent to all
    of N(A) reachable from B (avoiding T and A), paired with the symmetric
    choice in B, is a special even pair.  Ties go to the smallest id.
    """
    counters = counters if counters is not None else OpCounters()
    verts = path.vertices if isinstance(path, OuterPath) else tuple(path)
    dom = set(g.vertices) if domain is None else set(domain)
    tset = set(tset)
    cset = set(cset)
    x, v, w, y = verts[0], verts[1], verts[-2], verts[-1]
    counters.even_pair += g.degree(v) + g.degree(y) + g.degree(w) + g.degree(x)
    aside = (g.neighbor_set(v) & cset) - g.neighbor_set(y)
    bside = (g.neighbor_set(w) & cset) - g.neighbor_set(x)
    if not aside or not bside:
        raise NotArtemisError("an outer-path endpoint class came out empty")
    if aside & bside:
        raise NotArtemisError("the two endpoint classes overlap; input is outside the class")
    reach_a = _reached_boundary(g, dom, tset, aside, bside, counters)
    reach_b = _reached_boundary(g, dom, tset, bside, aside, counters)
    a = _sees_all(g, aside, reach_a, counters)
    b = _sees_all(g, bside, reach_b, counters)
    if a is None:
        raise NotArtemisError("no vertex of the first endpoint class sees its whole reachable boundary")
    if b is None:
        raise NotArtemisError("no vertex of the second endpoint class sees its whole reachable boundary")
    return a, b


def _reached_boundary(g: Graph, dom: set[int], tset: set[int], aside: set[int],
                      bside: set[int], counters: OpCounters) -> set[int]:
    """Vertices of N(A) reached by a search from B avoiding T and A."""
    boundary: set[int] = set()
    for a in sorted(aside):
        counters.even_pair += g.degree(a)
        boundary |= g.neighbor_set(a)
    boundary &= dom
    boundary -= aside
    searchable = dom - tset - aside
    targets = boundary & searchable
    if targets & bside:
        raise NotArtemisError("an edge joins the two endpoint classes; input is outside the class")
    forest = bfs_from_to(g, searchable, bside, targets)
    counters.even_pair += sum(g.degree(u) for u in forest.order)
    return forest.reached_targets


def _sees_all(g: Graph, side: set[int], reached: set[int],
              counters: OpCounters) -> int | None:
    need = len(reached)
    hits = {v: 0 for v in side}
    for u in sorted(reached):
        counters.even_pair += g.degree(u)
        for z in g.neighbors(u):
            if z in hits:
                hits[z] += 1
    for v in sorted(side):
        counters.even_pair += 1
        if hits[v] == need:
            return v
    return None


def find_special_even_pair(g: Graph, *, counters: OpCounters | None = None,
                           observer: PipelineObserver | None = None,
                           ) -> tuple[int, int] | DisjointCliques:
    """One special even pair of g, or the clique partition when none is needed.

    Levels descend through complete sets: find a maximal interesting set of
    the current level, return a pair from a minimal outer path if one exists,
    otherwise recurse into the complete set.  A level with no interesting set
    is a disjoint union of cliques; at the top that is the final verdict, and
    below the top the smallest vertices of its two first cliques form a pair
    (no path joins them inside the level, so the pair is vacuously even, and
    contracting it leaves the level chordal, hence prism-free).
    """
    counters = counters if counters is not None else OpCounters()
    observer = observer if observer is not None else _SILENT
    before = counters.total()
    dom = frozenset(g.vertices)
    depth = 0
    result: tuple[int, int] | DisjointCliques
    while True:
        depth += 1
        res = find_interesting(g, dom, counters=counters)
        observer.interesting(g, dom, res)
        if isinstance(res, DisjointCliques):
            if depth == 1:
                result = res
                break
            if len(res.cliques) < 2:
                raise NotArtemisError("a nested level collapsed to a single clique")
            pair = (min(res.cliques[0]), min(res.cliques[1]))
            observer.bottom_pair(g, dom, res, pair)
            result = pair
            break
        path = find_outer_path(g, res.tset, res.cset, dom, counters=counters)
        observer.outer_path(g, dom, res.tset, res.cset, path)
        if path is not None:
            pair = find_even_pair(g, res.tset, res.cset, path, dom, counters=counters)
            observer.even_pair(g, dom, res.tset, res.cset, path, pair)
            result = pair
            break
        dom = res.cset  # strictly smaller than dom, so the descent terminates
    counters.per_call.append(counters.total() - before)
    counters.chain_depths.append(depth)
    return result


def greedy_color_cliques(cliques: Iterable[Iterable[int]]) -> Coloring:
    """Color a disjoint union of cliques: the j-th smallest vertex of each
    clique gets color j, so the count equals the largest clique size."""
    assigned: dict[int, int] = {}
    width = 0
    for part in cliques:
        members = sorted(part)
        for j, v in enumerate(members):
            if v in assigned:
                raise GraphError(f"vertex {v} appears in two cliques")
            assigned[v] = j
        width = max(width, len(members))
    n = len(assigned)
    if assigned and set(assigned) != set(range(n)):
        raise GraphError("cliques must partition a dense vertex range")
    return Coloring(tuple(assigned[v] for v in range(n)), width)


def is_proper(g: Graph, coloring: Coloring) -> bool:
    if len(coloring.colors) != g.n:
        return False
    cols = coloring.colors
    return all(cols[u] != cols[v] for u, v in g.edges())


def _require_proper(g: Graph, coloring: Coloring, label: str) -> None:
    if len(coloring.colors) != g.n:
        raise ColoringError(f"{label} covers {len(coloring.colors)} vertices, graph has {g.n}")
    cols = coloring.colors
    for u, v in g.edges():
        if cols[u] == cols[v]:
            raise ColoringError(f"{label} gives both endpoints of edge ({u}, {v}) color {cols[u]}")


def lift_coloring(trace: ContractionTrace, coloring: Coloring, *,
                  final_graph: Graph | None = None,
                  original_graph: Graph | None = None) -> Coloring:
    """Copy a coloring of the fully contracted graph back to the original one.

    Walking the trace backwards, each step gives both merged endpoints the
    merged vertex's color.  The color count never changes.  When the final or
    original graph is supplied, properness is checked on that side.
    """
    if len(coloring.colors) != trace.current_n:
        raise ColoringError(
            f"coloring covers {len(coloring.colors)} vertices, trace ends at {trace.current_n}")
    if final_graph is not None:
        _require_proper(final_graph, coloring, "input coloring")
    cols = list(coloring.colors)
    for step in reversed(trace.steps):
        cols = [cols[new] for new in step.vertex_map]
    lifted = Coloring(tuple(cols), coloring.num_colors)
    if original_graph is not None:
        _require_proper(original_graph, lifted, "lifted coloring")
    return lifted


def color_artemis(g: Graph, *, counters: OpCounters | None = None,
                  observer: PipelineObserver | None = None,
                  ) -> tuple[Coloring, ContractionTrace]:
    """Optimal coloring of an Artemis graph with the contraction log.

    Contracts special even pairs until only disjoint cliques remain (at most
    n-1 times), colors the residue greedily and lifts the colors back.  Each
    contraction preserves both the chromatic number and the largest clique, so
    the result uses exactly as many colors as the largest clique of g.
    Non-Artemis inputs surface as NotArtemisError or ColoringError.
    """
    counters = counters if counters is not None else OpCounters()
    observer = observer if observer is not None else _SILENT
    trace = ContractionTrace(original_n=g.n)
    current = g
    while True:
        res = find_special_even_pair(current, counters=counters, observer=observer)
        if isinstance(res, DisjointCliques):
            residue = res
            break
        a, b = res
        successor, step = contract(current, a, b)
        observer.contracted(current, a, b, successor)
        trace.append(step)
        current = successor
    coloring = greedy_color_cliques(residue.cliques)
    lifted = lift_coloring(trace, coloring, final_graph=current, original_graph=g)
    return lifted, trace
