import itertools

import networkx as nx
import pytest

from facetpair.constructions import (
    build_cone_c,
    build_fig8,
    build_identity_double,
    build_k6,
    build_triple_t,
)


@pytest.fixture(scope="session")
def fig8():
    return build_fig8()


@pytest.fixture(scope="session")
def cone_c():
    return build_cone_c()


@pytest.fixture(scope="session")
def triple_t():
    return build_triple_t(3)


@pytest.fixture(scope="session")
def k6():
    return build_k6()


@pytest.fixture(scope="session")
def double4():
    return build_identity_double(4)


def closed_builders4():
    return {
        "tripleT(1)": build_triple_t(1),
        "tripleT(2)": build_triple_t(2),
        "tripleT(3)": build_triple_t(3),
        "k6block": build_k6(),
        "double4": build_identity_double(4),
    }


# -- independent oracles -----------------------------------------------------
# These rebuild the quotient structure with networkx from the raw gluing list,
# sharing nothing with the library's traversal code.

def raw_gluings(t):
    """All gluings in both directions as (a, f, b, g, images)."""
    out = []
    for g in t.gluings:
        p = g.perm.images
        inv = [0] * len(p)
        for i, j in enumerate(p):
            inv[j] = i
        out.append((g.source.simplex, g.source.facet, g.target.simplex, g.target.facet, p))
        out.append((g.target.simplex, g.target.facet, g.source.simplex, g.source.facet, tuple(inv)))
    return out


def oracle_face_components(t, k):
    """Components of k-label faces, as a set of frozensets of (simplex, labels)."""
    n = t.dimension + 1
    graph = nx.MultiGraph()
    for s in range(t.size):
        for labels in itertools.combinations(range(n), k):
            graph.add_node((s, labels))
    for a, f, b, _, p in raw_gluings(t):
        for labels in itertools.combinations(range(n), k):
            if f not in labels:
                graph.add_edge((a, labels), (b, tuple(sorted(p[x] for x in labels))))
    return {frozenset(c) for c in nx.connected_components(graph)}


def brute_force_orientable(t):
    gl = raw_gluings(t)
    for signs in itertools.product((1, -1), repeat=t.size):
        if all(signs[a] * signs[b] * perm_sign(p) == -1 for a, _, b, _, p in gl):
            return True
    return False


def perm_sign(images):
    inversions = sum(1 for i, j in itertools.combinations(range(len(images)), 2)
                     if images[i] > images[j])
    return -1 if inversions % 2 else 1
