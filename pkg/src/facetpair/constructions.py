"""
Builders for the figure-eight fixtures and the 4D triangulations built from them.

Tables below use 1-based vertex labels and are converted to 0-based labels
on load; label ``5`` there is label ``4`` here.  A table row ``(x1, x2, x3) <-> (y1, y2, y3)`` glues the
face of ``A`` spanned by the ``x`` vertices to the face of ``B`` spanned by
the ``y`` vertices, sending ``xi`` to ``yi``.
"""
from __future__ import annotations

from itertools import combinations

from .core4 import Triangulation4
from .link3 import Triangulation3

#: Face pairings of the two-tetrahedron figure-eight knot complement, A <-> B.
FIG8_TABLE = (
    ((1, 2, 4), (1, 4, 2)),
    ((1, 2, 3), (3, 2, 1)),
    ((1, 4, 3), (3, 2, 4)),
    ((2, 3, 4), (4, 1, 3)),
)

#: Facet pairings of the cone over the figure-eight triangulation, A <-> B.
CONE_TABLE = (
    ((5, 1, 2, 4), (5, 1, 4, 2)),
    ((5, 1, 2, 3), (5, 3, 2, 1)),
    ((5, 1, 4, 3), (5, 3, 2, 4)),
    ((5, 2, 3, 4), (5, 4, 1, 3)),
)

#: Pairing between copies of the cone: A:(1234) -> B:(2134), swapping labels 1 and 2.
INTER_COPY = ((1, 2, 3, 4), (2, 1, 3, 4))

#: Pinned proper 5-edge-colouring of K6 (vertices 0..5, colours 0..4).  The
#: standard round-robin 1-factorisation: colour c holds {c, 5} and the pairs
#: {c-k, c+k} mod 5 for k = 1, 2.
K6_COLORING = {
    tuple(sorted(e)): c
    for c in range(5)
    for e in [(c, 5), ((c - 1) % 5, (c + 1) % 5), ((c - 2) % 5, (c + 2) % 5)]
}


def _row_gluing(a: int, b: int, row, n_labels: int) -> tuple:
    """Gluing record from one table row between simplices ``a`` and ``b``."""
    src, dst = ([x - 1 for x in side] for side in row)
    images = [None] * n_labels
    for x, y in zip(src, dst):
        images[x] = y
    (f,) = set(range(n_labels)) - set(src)
    (g,) = set(range(n_labels)) - set(dst)
    images[f] = g
    return (a, f, b, g, images)


def build_fig8() -> Triangulation3:
    """The two-tetrahedron ideal triangulation of the figure-eight knot complement (A=0, B=1)."""
    return Triangulation3(2, [_row_gluing(0, 1, row, 4) for row in FIG8_TABLE])


def _cone_gluings(a: int, b: int) -> list[tuple]:
    return [_row_gluing(a, b, row, 5) for row in CONE_TABLE]


def build_cone_c() -> Triangulation4:
    """Cone over the figure-eight triangulation; facet 4 of both simplices stays unpaired."""
    return Triangulation4(2, _cone_gluings(0, 1))


def build_triple_t(k: int = 3) -> Triangulation4:
    """``k`` cones arranged in a cycle.

    Copy ``c`` occupies simplices ``2c`` (its A) and ``2c + 1`` (its B).  The
    unpaired facet of copy ``c``'s A is glued to that of copy ``c+1``'s B (mod
    ``k``) by the transposition of labels 0 and 1.  ``k = 3`` is the
    six-valent triangulation whose boundary holds three figure-eight knot
    complements.
    """
    if k < 1:
        raise ValueError(f"need at least one copy, got {k}")
    gluings = []
    for c in range(k):
        gluings.extend(_cone_gluings(2 * c, 2 * c + 1))
    for c in range(k):
        nxt = (c + 1) % k
        gluings.append(_row_gluing(2 * c, 2 * nxt + 1, INTER_COPY, 5))
    return Triangulation4(2 * k, gluings)


def check_coloring(coloring) -> dict:
    """Normalise and check a proper 5-edge-colouring of K6."""
    coloring = {tuple(sorted(e)): int(c) for e, c in coloring.items()}
    if set(coloring) != set(combinations(range(6), 2)):
        raise ValueError("colouring must cover exactly the 15 edges of K6")
    for v in range(6):
        colors = [c for e, c in coloring.items() if v in e]
        if sorted(colors) != list(range(5)):
            raise ValueError(f"colouring is not proper at vertex {v}")
    return coloring


def build_k6(coloring=None) -> Triangulation4:
    """Six simplices, one per vertex of K6; an edge of colour ``i`` glues facet ``i``
    of its two endpoint simplices by the identity."""
    coloring = check_coloring(K6_COLORING if coloring is None else coloring)
    gluings = [(u, c, w, c, range(5)) for (u, w), c in sorted(coloring.items())]
    return Triangulation4(6, gluings)


def build_identity_double(dimension: int = 4):
    """Two simplices glued along every facet by the identity."""
    cls = Triangulation4 if dimension == 4 else Triangulation3
    n = dimension + 1
    return cls(2, [(0, f, 1, f, range(n)) for f in range(n)])


BUILTINS = {
    "fig8": build_fig8,
    "coneC": build_cone_c,
    "tripleT": build_triple_t,
    "k6block": build_k6,
}
