"""
Closed surfaces built from triangles with side identifications.

Triangle corners are ``0, 1, 2`` and side ``i`` is the side opposite corner
``i``.  A side gluing pairs side ``i`` of one triangle with side ``j`` of
another (or the same) triangle; its ``reversed`` bit says whether the
endpoints of side ``i``, taken in increasing order, land on the endpoints of
side ``j`` in decreasing order.  That bit is all the corner bookkeeping
needed: the corner opposite the side follows the side.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple

from .perm import Perm3
from .unionfind import UnionFind


class SideGluing(NamedTuple):
    triangle: int
    side: int
    other_triangle: int
    other_side: int
    reversed: bool


def _ends(side: int) -> tuple[int, int]:
    return tuple(c for c in range(3) if c != side)


def corner_map(side: int, other_side: int, reversed_: bool) -> Perm3:
    u, v = _ends(side)
    u2, v2 = _ends(other_side)
    if reversed_:
        u2, v2 = v2, u2
    images = [0, 0, 0]
    images[side], images[u], images[v] = other_side, u2, v2
    return Perm3(images)


@dataclass(frozen=True)
class SurfaceType:
    name: str
    chi: int
    orientable: bool

    def __str__(self) -> str:
        if self.name != "other":
            return self.name
        kind = "orientable" if self.orientable else "non-orientable"
        return f"other(chi={self.chi}, {kind})"


class TriangulatedSurface:
    """A closed triangulated surface; every side must be glued exactly once."""

    def __init__(self, num_triangles: int, gluings):
        if num_triangles < 1:
            raise ValueError("a surface needs at least one triangle")
        self.num_triangles = int(num_triangles)
        adj = {}
        for g in gluings:
            g = SideGluing(int(g[0]), int(g[1]), int(g[2]), int(g[3]), bool(g[4]))
            a, b = (g.triangle, g.side), (g.other_triangle, g.other_side)
            if not all(0 <= t < num_triangles and 0 <= s < 3 for t, s in (a, b)):
                raise ValueError(f"side gluing {tuple(g)} out of range")
            if a == b:
                raise ValueError(f"side {a} glued to itself")
            if a in adj or b in adj:
                raise ValueError(f"side glued twice in {tuple(g)}")
            adj[a] = (b, g.reversed)
            adj[b] = (a, g.reversed)
        missing = [(t, s) for t in range(num_triangles) for s in range(3) if (t, s) not in adj]
        if missing:
            raise ValueError(f"surface is not closed; unglued sides {missing}")
        self._adj = adj

    @classmethod
    def from_perm_gluings(cls, num_triangles: int, gluings) -> TriangulatedSurface:
        """Build from ``(i, si, j, sj, images)`` records with a corner bijection each."""
        sides = []
        for i, si, j, sj, images in gluings:
            p = Perm3(images)
            if p[si] != sj:
                raise ValueError(f"corner map {images} does not send side {si} to side {sj}")
            u, _ = _ends(si)
            sides.append((i, si, j, sj, p[u] != _ends(sj)[0]))
        return cls(num_triangles, sides)

    def side_gluings(self) -> list[SideGluing]:
        return [SideGluing(*a, *b, rev) for a, (b, rev) in sorted(self._adj.items()) if a < b]

    def corner_classes(self) -> list[tuple[tuple[int, int], ...]]:
        """Surface vertices as classes of (triangle, corner)."""
        uf = UnionFind((t, c) for t in range(self.num_triangles) for c in range(3))
        for (t, s), ((t2, s2), rev) in self._adj.items():
            p = corner_map(s, s2, rev)
            for c in _ends(s):
                uf.union((t, c), (t2, p[c]))
        return uf.classes()

    def vertex_valences(self) -> list[int]:
        return [len(c) for c in self.corner_classes()]

    def components(self) -> list[TriangulatedSurface]:
        uf = UnionFind(range(self.num_triangles))
        for (t, _), ((t2, _), _) in self._adj.items():
            uf.union(t, t2)
        parts = uf.classes()
        if len(parts) == 1:
            return [self]
        out = []
        for part in parts:
            index = {t: i for i, t in enumerate(part)}
            out.append(TriangulatedSurface(len(part), [
                (index[g.triangle], g.side, index[g.other_triangle], g.other_side, g.reversed)
                for g in self.side_gluings() if g.triangle in index]))
        return out

    def is_connected(self) -> bool:
        return len(self.components()) == 1


def euler_characteristic(s: TriangulatedSurface) -> int:
    faces = s.num_triangles
    edges = 3 * faces // 2
    return len(s.corner_classes()) - edges + faces


def orientation(s: TriangulatedSurface) -> tuple[int, ...] | None:
    signs = [0] * s.num_triangles
    for root in range(s.num_triangles):
        if signs[root]:
            continue
        signs[root] = 1
        queue = deque([root])
        while queue:
            t = queue.popleft()
            for side in range(3):
                (t2, s2), rev = s._adj[(t, side)]
                want = -signs[t] * corner_map(side, s2, rev).sign()
                if signs[t2] == 0:
                    signs[t2] = want
                    queue.append(t2)
                elif signs[t2] != want:
                    return None
    return tuple(signs)


def orientable(s: TriangulatedSurface) -> bool:
    return orientation(s) is not None


def _classify_connected(s: TriangulatedSurface) -> SurfaceType:
    chi = euler_characteristic(s)
    ori = orientable(s)
    if ori and chi == 2:
        return SurfaceType("sphere", chi, ori)
    if chi == 0:
        return SurfaceType("torus" if ori else "klein_bottle", chi, ori)
    return SurfaceType("other", chi, ori)


def classify(s: TriangulatedSurface) -> SurfaceType:
    """Classify a connected surface by Euler characteristic and orientability."""
    if not s.is_connected():
        raise ValueError("surface is disconnected; use classify_components")
    return _classify_connected(s)


def classify_components(s: TriangulatedSurface) -> list[SurfaceType]:
    return [_classify_connected(c) for c in s.components()]


def surface_summary(s: TriangulatedSurface) -> dict:
    """The JSON form used in reports."""
    kind = classify(s)
    return {"triangles": s.num_triangles, "chi": kind.chi,
            "orientable": kind.orientable, "class": str(kind)}
