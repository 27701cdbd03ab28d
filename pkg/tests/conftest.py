"""Session fixtures: the exhaustive small-graph corpus."""

import pytest

from kviso.graphs import Graph


@pytest.fixture(scope="session")
def atlas():
    """All graphs on at most 7 vertices, one per isomorphism class.

    Backed by the networkx graph atlas; converted to our Graph type once
    per session.
    """
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for nxg in graph_atlas_g():
        n = nxg.number_of_nodes()
        out.append(Graph(n, [(min(u, v), max(u, v)) for u, v in nxg.edges()]))
    return out


@pytest.fixture(scope="session")
def atlas_by_n(atlas):
    """Atlas graphs grouped by vertex count."""
    groups = {}
    for g in atlas:
        groups.setdefault(g.n, []).append(g)
    return groups
