"""Immutable simple graphs and the search primitives the coloring pipeline is built on.

Vertices are dense 0-based integers.  Every neighbor scan runs in ascending
vertex order and every tie is broken by smallest id, so each algorithm in the
package produces the same output for the same input labeling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

# Below this vertex count a per-vertex neighborhood bitmask is kept alongside
# the set/list adjacency; above it, adjacency tests fall back to set membership.
BITSET_THRESHOLD = 4096


class GraphError(ValueError):
    """Malformed construction input or misuse of a graph primitive."""


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    Instances are immutable: contraction, complement and induced subgraphs
    return new graphs, which makes traces and parallel reads safe.  Adjacency
    is stored three ways: frozensets for O(1) membership, sorted tuples for
    deterministic O(deg) scans, and (up to ``bitset_threshold``) int bitmasks
    for word-parallel set algebra.
    """

    __slots__ = ("n", "m", "_sets", "_lists", "_masks")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]], *,
                 bitset_threshold: int = BITSET_THRESHOLD) -> None:
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj: list[set[int]] = [set() for _ in range(n)]
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u} is not allowed")
            if v not in adj[u]:
                adj[u].add(v)
                adj[v].add(u)
                m += 1
        self.n = n
        self.m = m
        self._sets = tuple(frozenset(s) for s in adj)
        self._lists = tuple(tuple(sorted(s)) for s in adj)
        if n <= bitset_threshold:
            self._masks: tuple[int, ...] | None = tuple(
                sum(1 << w for w in s) for s in adj)
        else:
            self._masks = None

    @property
    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[int, ...]:
        """Neighbors of v in ascending order."""
        return self._lists[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._lists[v])

    def adjacent(self, u: int, v: int) -> bool:
        if self._masks is not None:
            return bool(self._masks[u] >> v & 1)
        return v in self._sets[u]

    @property
    def has_masks(self) -> bool:
        return self._masks is not None

    def mask(self, v: int) -> int:
        """Neighborhood of v as a bitmask; only for graphs under the threshold."""
        if self._masks is None:
            raise GraphError("bitmask adjacency disabled for this graph size")
        return self._masks[v]

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending lexicographic order."""
        for u in range(self.n):
            for v in self._lists[u]:
                if v > u:
                    yield (u, v)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._sets == other._sets

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n: int, edges: Iterable[tuple[int, int]], *,
              bitset_threshold: int = BITSET_THRESHOLD) -> Graph:
    """Build a graph from a vertex count and an edge list.

    Duplicate edges are collapsed; out-of-range endpoints and self-loops are
    rejected with a diagnostic.
    """
    return Graph(n, edges, bitset_threshold=bitset_threshold)


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def iter_bits(mask: int) -> Iterator[int]:
    """Set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class ContractionStep:
    """Bookkeeping for one merge of two non-adjacent vertices.

    ``vertex_map`` sends every pre-merge id to its post-merge id; ``a`` and
    ``b`` both map to ``merged``.
    """

    a: int
    b: int
    merged: int
    vertex_map: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.a == self.b:
            raise GraphError("contraction step needs two distinct vertices")
        if self.vertex_map[self.a] != self.merged or self.vertex_map[self.b] != self.merged:
            raise GraphError("vertex_map must send both endpoints to the merged id")
        if set(self.vertex_map) != set(range(len(self.vertex_map) - 1)):
            raise GraphError("vertex_map must be onto the successor vertex range")


@dataclass
class ContractionTrace:
    """Ordered log of contractions; replaying it backwards lifts a coloring."""

    original_n: int
    steps: list[ContractionStep] = field(default_factory=list)

    def append(self, step: ContractionStep) -> None:
        if len(step.vertex_map) != self.current_n:
            raise GraphError(
                f"step expects {len(step.vertex_map)} vertices, trace is at {self.current_n}")
        if len(self.steps) >= self.original_n - 1:
            raise GraphError("trace cannot exceed n-1 contractions")
        self.steps.append(step)

    @property
    def current_n(self) -> int:
        return self.original_n - len(self.steps)


@dataclass
class SearchForest:
    """Result of a breadth-first search; ``parent`` maps roots to None."""

    parent: dict[int, int | None]
    order: list[int]
    reached_targets: set[int]

    def path_from_root(self, v: int) -> list[int]:
        """Vertices from the root of v's tree down to v."""
        path = [v]
        while (p := self.parent[path[-1]]) is not None:
            path.append(p)
        path.reverse()
        return path


def contract(g: Graph, a: int, b: int) -> tuple[Graph, ContractionStep]:
    """Merge the non-adjacent vertices a and b into one vertex.

    The merged vertex keeps the smaller of the two ids and is adjacent to the
    union of both neighborhoods; ids above the larger one shift down by one so
    the result stays dense.
    """
    if a == b:
        raise GraphError("cannot contract a vertex with itself")
    if not (0 <= a < g.n and 0 <= b < g.n):
        raise GraphError(f"contraction endpoints ({a}, {b}) out of range")
    if g.adjacent(a, b):
        raise GraphError(f"vertices {a} and {b} are adjacent; contraction of an edge is undefined")
    lo, hi = (a, b) if a < b else (b, a)
    vertex_map = tuple(
        lo if v == a or v == b else (v - 1 if v > hi else v)
        for v in range(g.n))
    mapped = set()
    for u, v in g.edges():
        mu, mv = vertex_map[u], vertex_map[v]
        if mu != mv:
            mapped.add((mu, mv) if mu < mv else (mv, mu))
    successor = Graph(g.n - 1, sorted(mapped))
    return successor, ContractionStep(a=a, b=b, merged=lo, vertex_map=vertex_map)


def complement(g: Graph) -> Graph:
    """Graph on the same vertices with exactly the missing edges."""
    edges = []
    for u in range(g.n):
        nbrs = g.neighbor_set(u)
        for v in range(u + 1, g.n):
            if v not in nbrs:
                edges.append((u, v))
    return Graph(g.n, edges)


def induced(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``keep``, relabeled densely.

    Returns the subgraph and the old ids in ascending order, indexed by new id.
    """
    old_ids = tuple(sorted(set(keep)))
    if old_ids and not (0 <= old_ids[0] and old_ids[-1] < g.n):
        raise GraphError("induced subgraph vertices out of range")
    to_new = {old: new for new, old in enumerate(old_ids)}
    edges = []
    for new, old in enumerate(old_ids):
        for w in g.neighbors(old):
            if w > old and w in to_new:
                edges.append((new, to_new[w]))
    return Graph(len(old_ids), edges), old_ids


def common_complete(g: Graph, tset: Iterable[int]) -> set[int]:
    """Vertices outside ``tset`` adjacent to every vertex of ``tset``."""
    members = set(tset)
    if not members:
        raise GraphError("common_complete needs a nonempty vertex set")
    if g.has_masks:
        acc = (1 << g.n) - 1
        for v in members:
            acc &= g.mask(v)
        acc &= ~mask_of(members)
        return set(iter_bits(acc))
    result: set[int] | None = None
    for v in members:
        nbrs = g.neighbor_set(v)
        result = set(nbrs) if result is None else result & nbrs
    assert result is not None
    return result - members


def is_clique(g: Graph, s: Iterable[int]) -> bool:
    """True when every pair inside s is adjacent; the empty set is a clique."""
    members = sorted(set(s))
    size = len(members)
    if size <= 1:
        return True
    if g.has_masks:
        smask = mask_of(members)
        return all((smask & ~g.mask(v)) == 1 << v for v in members)
    need = size - 1
    return all(len(g.neighbor_set(v) & set(members)) == need for v in members)


def components(g: Graph, s: Iterable[int] | None = None) -> list[set[int]]:
    """Connected components of the subgraph induced on s, ordered by smallest member."""
    remaining = set(g.vertices) if s is None else set(s)
    parts = []
    for seed in sorted(remaining):
        if seed not in remaining:
            continue
        comp = {seed}
        stack = [seed]
        remaining.discard(seed)
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in remaining:
                    remaining.discard(w)
                    comp.add(w)
                    stack.append(w)
        parts.append(comp)
    return parts


def bfs_from_to(g: Graph, domain: Iterable[int], sources: Iterable[int],
                targets: Iterable[int]) -> SearchForest:
    """Breadth-first search started from all of ``sources`` at once, restricted
    to ``domain``, where ``targets`` may be discovered but are never expanded.

    ``reached_targets`` collects the targets adjacent to some expanded vertex.
    The queue is FIFO; every scan is in ascending vertex order.
    """
    dom = set(domain)
    src = sorted(set(sources))
    tgt = set(targets)
    if not dom.issuperset(src) or not dom.issuperset(tgt):
        raise GraphError("sources and targets must lie inside the search domain")
    if tgt.intersection(src):
        raise GraphError("sources and targets must be disjoint")
    parent: dict[int, int | None] = {v: None for v in src}
    order: list[int] = []
    reached: set[int] = set()
    seen = set(src)
    queue = deque(src)
    while queue:
        u = queue.popleft()
        order.append(u)
        for w in g.neighbors(u):
            if w not in dom or w in seen:
                continue
            seen.add(w)
            parent[w] = u
            if w in tgt:
                reached.add(w)
            else:
                queue.append(w)
    return SearchForest(parent=parent, order=order, reached_targets=reached)


def is_simplicial(g: Graph, v: int) -> bool:
    """True when the neighborhood of v is a clique."""
    return is_clique(g, g.neighbor_set(v))
