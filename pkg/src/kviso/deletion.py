"""Enumerating small vertex-deletion sets into a hereditary class.

The central routine is a bounded search tree: as long as a forbidden
occurrence survives, one of its at most d vertices must be deleted, so
branching on all of them explores at most sum(d^i, i <= k) nodes and meets
every minimal deletion set of size at most k. Vertex covers get a dedicated
route through the high/low-degree kernel, and twin covers reduce to vertex
covers after removing edges between twin vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import Graph, are_twins, induced_subgraph, iter_bits
from .recognition import (
    ForbiddenFamily,
    first_occurrence_avoiding,
    is_member,
    _induces_some,
)


@dataclass(frozen=True)
class DeletionSet:
    """A sorted set of vertices whose removal lands in the target class."""

    vertices: tuple[int, ...]
    family: str

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        if list(self.vertices) != sorted(set(self.vertices)):
            raise ValueError("vertices must be strictly increasing")


@dataclass
class SearchStats:
    """Counters filled in by the branching searches."""

    nodes: int = 0


@dataclass(frozen=True)
class KernelDecomposition:
    """High/low degree split of a vertex-cover instance at budget k.

    `high` holds the vertices of degree above k (forced into every cover of
    size <= k), `low` the remaining vertices that still have a neighbour
    outside `high`. Every other vertex is irrelevant to minimal covers.
    """

    high: tuple[int, ...]
    low: tuple[int, ...]
    k: int

    @property
    def b(self) -> int:
        return len(self.high)


def enumerate_occurrences(g: Graph, fam: ForbiddenFamily) -> list[tuple[int, ...]]:
    """All vertex subsets inducing a forbidden pattern, in lexicographic order."""
    found = []
    for size in sorted(fam.pattern_sizes):
        for combo in combinations(range(g.n), size):
            if _induces_some(g, combo, fam):
                found.append(combo)
    found.sort()
    return found


def enumerate_deletion_sets(
    g: Graph, fam: ForbiddenFamily, k: int, stats: SearchStats | None = None
) -> list[DeletionSet]:
    """All minimal deletion sets of size at most k into the family's class.

    An empty result means the class is more than k deletions away. A graph
    already in the class yields exactly the empty set. Output is sorted by
    size, then lexicographically.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if stats is None:
        stats = SearchStats()
    found: set[int] = set()

    def branch(removed: int, depth: int):
        stats.nodes += 1
        occ = first_occurrence_avoiding(g, fam, removed)
        if occ is None:
            found.add(removed)
            return
        if depth == k:
            return
        for v in occ:
            branch(removed | (1 << v), depth + 1)

    branch(0, 0)

    minimal = []
    for mask in found:
        vs = tuple(iter_bits(mask))
        if any(
            first_occurrence_avoiding(g, fam, mask & ~(1 << v)) is None for v in vs
        ):
            continue  # some single vertex is redundant, a subset was found too
        # cheap insurance at small scale; the leaf condition above is itself
        # a membership check through the fast route
        if g.n <= 12:
            rest = [u for u in range(g.n) if not (mask >> u) & 1]
            if not is_member(induced_subgraph(g, rest)[0], fam):
                raise AssertionError("search produced a non-member remainder")
        minimal.append(vs)

    minimal.sort(key=lambda vs: (len(vs), vs))
    return [DeletionSet(vs, fam.name) for vs in minimal]


def minimum_deletion_set(
    g: Graph, fam: ForbiddenFamily, k: int, stats: SearchStats | None = None
) -> DeletionSet | None:
    """A smallest deletion set of size at most k (first in enumeration order)."""
    sets = enumerate_deletion_sets(g, fam, k, stats)
    return sets[0] if sets else None


def buss_kernel(g: Graph, k: int) -> KernelDecomposition | None:
    """High/low degree decomposition for vertex cover, or None to reject.

    Rejection means no vertex cover of size at most k exists: either more
    than k vertices have degree above k, or the low part is larger than
    (k - b) * (k + 1), which a yes-instance cannot reach.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    high = [v for v in range(g.n) if g.degree(v) > k]
    if len(high) > k:
        return None
    high_mask = 0
    for v in high:
        high_mask |= 1 << v
    low = [
        v
        for v in range(g.n)
        if g.degree(v) <= k and g.adj_bits[v] & ~high_mask
    ]
    if len(low) > (k - len(high)) * (k + 1):
        return None
    return KernelDecomposition(tuple(high), tuple(low), k)


def enumerate_minimal_vertex_covers(g: Graph, k: int) -> list[DeletionSet]:
    """All minimal vertex covers of size at most k, via the degree kernel.

    Every cover of size <= k must contain all high-degree vertices, and a
    minimal one contains nothing outside high + low, so scanning subsets of
    the low part is exhaustive. At most 2^k sets come back.
    """
    kd = buss_kernel(g, k)
    if kd is None:
        return []
    high_mask = 0
    for v in kd.high:
        high_mask |= 1 << v
    low_edges = [
        (u, v) for u, v in combinations(kd.low, 2) if g.has_edge(u, v)
    ]
    covers = []
    for r in range(0, kd.k - kd.b + 1):
        for chosen in combinations(kd.low, r):
            chosen_set = set(chosen)
            if any(u not in chosen_set and v not in chosen_set for u, v in low_edges):
                continue
            cover_mask = high_mask
            for v in chosen:
                cover_mask |= 1 << v
            # minimal iff every optional vertex still covers a private edge
            if any(g.adj_bits[v] & ~cover_mask == 0 for v in chosen):
                continue
            covers.append(tuple(sorted(kd.high + chosen)))
    covers.sort(key=lambda vs: (len(vs), vs))
    return [DeletionSet(vs, "vertex-cover") for vs in covers]


def remove_twin_edges(g: Graph) -> Graph:
    """Drop every edge whose endpoints have equal neighbourhoods outside the pair."""
    kept = [(u, v) for u, v in g.edges() if not are_twins(g, u, v)]
    return Graph(g.n, kept)


def enumerate_twin_covers(g: Graph, k: int) -> list[DeletionSet]:
    """All minimal twin covers of size at most k.

    A twin cover touches every edge except those between twins; these are
    exactly the vertex covers of the graph with twin edges removed. What is
    left after removing a twin cover is a disjoint union of cliques.
    """
    stripped = remove_twin_edges(g)
    return [
        DeletionSet(ds.vertices, "twin-cover")
        for ds in enumerate_minimal_vertex_covers(stripped, k)
    ]
