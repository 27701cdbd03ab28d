"""Shared generators and slow reference implementations for the test suite.

Everything here is deliberately written from first principles rather than
calling back into the package, so that agreement between the two is evidence
and not tautology.
"""

import itertools

from kviso.graphs import Graph


# ---------------------------------------------------------------------------
# random instance generators


def random_graph(rng, n, p=0.5):
    """Erdos-Renyi style graph on n vertices with edge probability p."""
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)


def permuted_copy(rng, g):
    """Return (h, perm) where h is g relabelled by a uniform random perm."""
    perm = list(range(g.n))
    rng.shuffle(perm)
    edges = [(perm[u], perm[v]) for u, v in g.edges()]
    return Graph(g.n, edges), perm


def random_cograph(rng, n):
    """Random cograph built by recursively splitting into union/join parts."""
    verts = list(range(n))

    def build(vs, join):
        if len(vs) <= 1:
            return []
        cut = rng.randint(1, len(vs) - 1)
        shuffled = vs[:]
        rng.shuffle(shuffled)
        left, right = shuffled[:cut], shuffled[cut:]
        edges = build(left, not join) + build(right, not join)
        if join:
            edges += [(u, v) for u in left for v in right]
        return edges

    return Graph(n, build(verts, rng.random() < 0.5))


def random_cluster(rng, n):
    """Random disjoint union of cliques on n vertices."""
    verts = list(range(n))
    rng.shuffle(verts)
    edges = []
    while verts:
        take = rng.randint(1, len(verts))
        part, verts = verts[:take], verts[take:]
        edges += [(u, v) for i, u in enumerate(part) for v in part[i + 1:]]
    return Graph(n, edges)


def random_threshold(rng, n):
    """Random threshold graph: repeatedly add an isolated or universal vertex."""
    edges = []
    for v in range(n):
        if v and rng.random() < 0.5:
            edges += [(u, v) for u in range(v)]
    g = Graph(n, edges)
    h, _ = permuted_copy(rng, g)
    return h


def planted_cover_graph(rng, n, k, p=0.4):
    """Graph on n vertices whose edges all touch {0..k-1}, then relabelled.

    Returns (graph, cover) with cover a vertex cover of size <= k.
    """
    edges = set()
    for u in range(k):
        for v in range(n):
            if v != u and rng.random() < p:
                edges.add((min(u, v), max(u, v)))
    g = Graph(n, sorted(edges))
    h, perm = permuted_copy(rng, g)
    cover = tuple(sorted(perm[u] for u in range(k)))
    return h, cover


def plant_deletion_vertices(rng, g, extra, p=0.5):
    """Append `extra` vertices with random attachments to g."""
    n = g.n + extra
    edges = list(g.edges())
    for w in range(g.n, n):
        for v in range(w):
            if rng.random() < p:
                edges.append((v, w))
    return Graph(n, edges)


def random_cnf(rng, num_vars, num_clauses, width=3):
    """Random CNF clause list over 1..num_vars, width literals per clause."""
    clauses = []
    for _ in range(num_clauses):
        vs = rng.sample(range(1, num_vars + 1), min(width, num_vars))
        clauses.append(tuple(v if rng.random() < 0.5 else -v for v in vs))
    return tuple(clauses)


# ---------------------------------------------------------------------------
# slow reference oracles


def brute_induces(g, pattern):
    """Exhaustive induced-subgraph test: any injection realizing pattern?"""
    if pattern.n > g.n:
        return False
    for image in itertools.permutations(range(g.n), pattern.n):
        if all(
            g.has_edge(image[a], image[b]) == pattern.has_edge(a, b)
            for a in range(pattern.n)
            for b in range(a + 1, pattern.n)
        ):
            return True
    return False


def is_threshold_by_peeling(g):
    """Threshold test via the peeling characterization.

    Repeatedly delete an isolated or universal vertex; the graph is threshold
    iff this empties it.
    """
    alive = set(range(g.n))
    while alive:
        for v in list(alive):
            deg = len(g.adj[v] & alive)
            if deg == 0 or deg == len(alive) - 1:
                alive.discard(v)
                break
        else:
            return False
    return True


def min_vertex_cover_size(g):
    """Exact minimum vertex cover size by increasing-size subset search."""
    edges = g.edges()
    if not edges:
        return 0
    for r in range(1, g.n + 1):
        for cand in itertools.combinations(range(g.n), r):
            cs = set(cand)
            if all(u in cs or v in cs for u, v in edges):
                return r
    raise AssertionError("unreachable: V always covers")


def is_vertex_cover(g, vertices):
    vs = set(vertices)
    return all(u in vs or v in vs for u, v in g.edges())


def plain_minimax_hitting(universe, sets, budget):
    """Game value by raw minimax over every legal move, no pruning tricks.

    True iff the first player forces completion of a hitting set within
    `budget` total moves; the mover who completes it wins, and running out
    of budget is a loss for the first player.
    """

    def hits_all(chosen):
        return all(s & chosen for s in sets)

    def value(chosen, moves_left, mover_is_one):
        if moves_left == 0:
            return False
        for e in universe:
            if e in chosen:
                continue
            grown = chosen | {e}
            if hits_all(grown):
                if mover_is_one:
                    return True
                return False
            sub = value(grown, moves_left - 1, not mover_is_one)
            if mover_is_one and sub:
                return True
            if not mover_is_one and not sub:
                return False
        return not mover_is_one

    return value(frozenset(), budget, True)


def cnf_true_under(clauses, true_vars):
    """Does setting exactly true_vars to true satisfy every clause?"""
    return all(
        any((lit > 0) == (abs(lit) in true_vars) for lit in clause)
        for clause in clauses
    )


def cnf_weight_k_satisfiable(num_vars, clauses, k):
    """Subset-enumeration oracle for weight-at-most-k satisfiability."""
    for r in range(k + 1):
        for combo in itertools.combinations(range(1, num_vars + 1), r):
            if cnf_true_under(clauses, set(combo)):
                return True
    return False
