"""Oracle-backed verification of every intermediate structure the pipeline emits.

Attach an :class:`OracleVerifier` as the pipeline observer and each maximal
interesting set, outer path, to-be-contracted pair and contracted graph gets
cross-checked against the brute-force oracles.  Failures are collected, not
raised, so a whole run can be audited in one pass.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .engine import DisjointCliques, InterestingSetResult, OuterPath, PipelineObserver
from .graphs import Graph, common_complete, components, induced, is_clique, is_simplicial
from .handles import interesting_gives_handle_check
from .oracles import (
    DEFAULT_BUDGET,
    OracleBudget,
    brute_maximal_interesting_check,
    brute_minimal_outer_path_check,
    fonlupt_uhry_check,
    is_artemis,
    is_even_pair_exact,
    is_special_even_pair_exact,
    outer_path_exists_criterion,
)


@dataclass
class OracleVerifier(PipelineObserver):
    """Collects one named check per oracle-verified guarantee.

    ``checks`` counts how often each check ran, ``failures`` holds a message
    per violated guarantee.  Checks silently skip levels larger than the
    oracle budget.
    """

    budget: OracleBudget = DEFAULT_BUDGET
    checks: Counter = field(default_factory=Counter)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def _record(self, name: str, passed: bool, detail: str) -> None:
        self.checks[name] += 1
        if not passed:
            self.failures.append(f"{name}: {detail}")

    def _level(self, g: Graph, domain: frozenset[int]):
        """Materialized level subgraph plus the original-to-local id map."""
        if len(domain) == g.n:
            return g, {v: v for v in g.vertices}
        sub, old_ids = induced(g, domain)
        return sub, {old: new for new, old in enumerate(old_ids)}

    def interesting(self, g: Graph, domain: frozenset[int],
                    result: InterestingSetResult) -> None:
        if len(domain) > self.budget.max_n:
            return
        sub, to_local = self._level(g, domain)
        if isinstance(result, DisjointCliques):
            parts = [frozenset(to_local[v] for v in part) for part in result.cliques]
            good = (sorted(map(sorted, parts)) == sorted(map(sorted, components(sub)))
                    and all(is_clique(sub, p) for p in parts)
                    and all(is_simplicial(sub, v) for v in sub.vertices))
            self._record("disjoint_cliques", good,
                         f"partition {parts} is not the clique components of the level")
            return
        tset = {to_local[v] for v in result.tset}
        cset = {to_local[v] for v in result.cset}
        self._record("interesting_maximal",
                     brute_maximal_interesting_check(sub, tset, self.budget),
                     f"set {sorted(result.tset)} is not maximal interesting in its level")
        self._record("interesting_complete", cset == common_complete(sub, tset),
                     f"complete set mismatch for {sorted(result.tset)}")
        self._record("handle_bridge_from_interesting",
                     interesting_gives_handle_check(sub, tset, self.budget),
                     f"set {sorted(result.tset)} gives no handle in the complement")

    def outer_path(self, g: Graph, domain: frozenset[int], tset: frozenset[int],
                   cset: frozenset[int], path: OuterPath | None) -> None:
        if len(domain) > self.budget.max_n:
            return
        sub, to_local = self._level(g, domain)
        t_local = {to_local[v] for v in tset}
        c_local = {to_local[v] for v in cset}
        if path is None:
            self._record("outer_none",
                         not outer_path_exists_criterion(sub, t_local, c_local),
                         f"a T-outer path exists but none was returned (T={sorted(tset)})")
            return
        local = tuple(to_local[v] for v in path.vertices)
        self._record("outer_parity", path.length % 2 == 0 and path.length >= 4,
                     f"outer path {path.vertices} has odd or short length {path.length}")
        self._record("outer_minimal",
                     brute_minimal_outer_path_check(sub, t_local, c_local, local, self.budget),
                     f"path {path.vertices} is not a minimal T-outer path")

    def bottom_pair(self, g: Graph, domain: frozenset[int],
                    result: DisjointCliques, pair: tuple[int, int]) -> None:
        if len(domain) > self.budget.max_n:
            return
        sub, to_local = self._level(g, domain)
        a, b = (to_local[pair[0]], to_local[pair[1]])
        self._record("bottom_pair_special",
                     is_special_even_pair_exact(sub, a, b, self.budget),
                     f"bottom pair {pair} is not special in its level")

    def contracted(self, before: Graph, a: int, b: int, after: Graph) -> None:
        if before.n > self.budget.max_n:
            return
        self._record("pair_even", is_even_pair_exact(before, a, b, self.budget),
                     f"contracted pair ({a}, {b}) is not an even pair")
        self._record("pair_special", is_special_even_pair_exact(before, a, b, self.budget),
                     f"contracted pair ({a}, {b}) is not special")
        self._record("pair_invariance", fonlupt_uhry_check(before, a, b, self.budget),
                     f"contracting ({a}, {b}) changed the color or clique number")
        ok, witness = is_artemis(after, self.budget)
        self._record("class_preserved", ok,
                     f"contracting ({a}, {b}) left the class: {witness}")
