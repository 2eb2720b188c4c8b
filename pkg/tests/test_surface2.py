import random

import networkx as nx
import pytest

from facetpair.link3 import cusp_link_surface
from facetpair.surface2 import (
    TriangulatedSurface,
    classify,
    classify_components,
    corner_map,
    euler_characteristic,
    orientable,
)


def doubled_triangle(reversed_=False):
    return TriangulatedSurface(2, [(0, s, 1, s, reversed_) for s in range(3)])


def test_doubled_triangle_is_sphere():
    s = doubled_triangle()
    assert euler_characteristic(s) == 2
    assert orientable(s)
    assert str(classify(s)) == "sphere"


def test_corner_map_follows_the_bit():
    assert corner_map(0, 0, False).images == (0, 1, 2)
    assert corner_map(0, 0, True).images == (0, 2, 1)
    assert corner_map(2, 0, False).images == (1, 2, 0)


def test_side_glued_twice_rejected():
    with pytest.raises(ValueError):
        TriangulatedSurface(2, [(0, 0, 1, 0, False), (0, 0, 1, 1, False)])


def test_open_surface_rejected():
    with pytest.raises(ValueError):
        TriangulatedSurface(2, [(0, 0, 1, 0, False)])


def test_self_glued_side_rejected():
    with pytest.raises(ValueError):
        TriangulatedSurface(1, [(0, 0, 0, 0, False)])


def _oracle_vertices(s):
    graph = nx.Graph()
    for t in range(s.num_triangles):
        for c in range(3):
            graph.add_node((t, c))
    for g in s.side_gluings():
        p = corner_map(g.side, g.other_side, g.reversed)
        for c in range(3):
            if c != g.side:
                graph.add_edge((g.triangle, c), (g.other_triangle, p[c]))
    return nx.number_connected_components(graph)


def test_euler_matches_corner_oracle(fig8):
    s = cusp_link_surface(fig8, 0)
    v = _oracle_vertices(s)
    assert v == 4
    assert euler_characteristic(s) == v - 3 * s.num_triangles // 2 + s.num_triangles


def test_components_classified_separately():
    a = doubled_triangle()
    gl = [tuple(g) for g in a.side_gluings()] + [(g[0] + 2, g[1], g[2] + 2, g[3], g[4])
                                                 for g in a.side_gluings()]
    s = TriangulatedSurface(4, gl)
    assert euler_characteristic(s) == 4
    assert [str(c) for c in classify_components(s)] == ["sphere", "sphere"]
    with pytest.raises(ValueError):
        classify(s)


def test_projective_plane_like_is_other():
    # doubled triangle with one side reversed is non-orientable
    s = TriangulatedSurface(2, [(0, 0, 1, 0, True), (0, 1, 1, 1, False), (0, 2, 1, 2, False)])
    kind = classify(s)
    assert not kind.orientable
    assert kind.name == "other"
    assert str(kind) == f"other(chi={kind.chi}, non-orientable)"


def test_relabeling_invariance(fig8):
    s = cusp_link_surface(fig8, 0)
    rng = random.Random(7)
    for _ in range(20):
        order = list(range(s.num_triangles))
        rng.shuffle(order)
        relabeled = TriangulatedSurface(s.num_triangles, [
            (order[g.other_triangle], g.other_side, order[g.triangle], g.side, g.reversed)
            for g in s.side_gluings()])
        assert euler_characteristic(relabeled) == euler_characteristic(s)
        assert orientable(relabeled) == orientable(s)


def test_valence_sum(fig8):
    s = cusp_link_surface(fig8, 0)
    assert sum(s.vertex_valences()) == 3 * s.num_triangles


def test_flat_classes_have_chi_zero(k6):
    from facetpair.link3 import cusp_surface4

    for i in range(10):
        kind = classify(cusp_surface4(k6, i))
        if kind.name in ("torus", "klein_bottle"):
            assert kind.chi == 0
