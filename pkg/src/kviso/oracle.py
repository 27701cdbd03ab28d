"""Brute-force reference implementations.

These exist to cross-check the clever code paths, so they stay deliberately
plain: backtracking over vertex maps with degree and color compatibility as
the only pruning, and deletion sets by scanning every subset. Exponential,
fine for n up to about 10.
"""

from __future__ import annotations

from itertools import combinations

from .deletion import DeletionSet
from .graphs import ColoredGraph, Graph, induced_subgraph
from .recognition import ForbiddenFamily, is_member
from .results import IsoResult


def _backtrack(n: int, compatible, consistent) -> list[int] | None:
    mapping = [-1] * n
    used = [False] * n

    def extend(u: int) -> bool:
        if u == n:
            return True
        for v in range(n):
            if used[v] or not compatible(u, v):
                continue
            if not consistent(u, v, mapping):
                continue
            mapping[u] = v
            used[v] = True
            if extend(u + 1):
                return True
            mapping[u] = -1
            used[v] = False
        return False

    return mapping if extend(0) else None


def brute_force_gi(g1: Graph, g2: Graph) -> IsoResult:
    """Isomorphism by exhaustive backtracking."""
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return IsoResult.no()
    if g1.degree_sequence() != g2.degree_sequence():
        return IsoResult.no()

    def compatible(u, v):
        return g1.degree(u) == g2.degree(v)

    def consistent(u, v, mapping):
        return all(
            (w in g1.adj[u]) == (mapping[w] in g2.adj[v]) for w in range(u)
        )

    mapping = _backtrack(g1.n, compatible, consistent)
    return IsoResult.yes(mapping) if mapping is not None else IsoResult.no()


def brute_force_colored_gi(cg1: ColoredGraph, cg2: ColoredGraph) -> IsoResult:
    """Color-preserving isomorphism by exhaustive backtracking."""
    g1, g2 = cg1.graph, cg2.graph
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return IsoResult.no()
    census1: dict = {}
    census2: dict = {}
    for v in range(g1.n):
        census1[cg1.label(v)] = census1.get(cg1.label(v), 0) + 1
    for v in range(g2.n):
        census2[cg2.label(v)] = census2.get(cg2.label(v), 0) + 1
    if census1 != census2:
        return IsoResult.no()

    def compatible(u, v):
        return g1.degree(u) == g2.degree(v) and cg1.label(u) == cg2.label(v)

    def consistent(u, v, mapping):
        return all(
            (w in g1.adj[u]) == (mapping[w] in g2.adj[v]) for w in range(u)
        )

    mapping = _backtrack(g1.n, compatible, consistent)
    return IsoResult.yes(mapping) if mapping is not None else IsoResult.no()


def brute_force_deletion_sets(
    g: Graph, fam: ForbiddenFamily, k: int
) -> list[DeletionSet]:
    """All minimal deletion sets of size at most k, by scanning every subset."""
    if k < 0:
        raise ValueError("k must be non-negative")
    hits: list[tuple[int, ...]] = []
    for r in range(0, k + 1):
        for combo in combinations(range(g.n), r):
            rest = [v for v in range(g.n) if v not in combo]
            if is_member(induced_subgraph(g, rest)[0], fam):
                hits.append(combo)
    hit_sets = [set(h) for h in hits]
    minimal = [
        h
        for h, hs in zip(hits, hit_sets)
        if not any(other < hs for other in hit_sets)
    ]
    minimal.sort(key=lambda vs: (len(vs), vs))
    return [DeletionSet(vs, fam.name) for vs in minimal]
