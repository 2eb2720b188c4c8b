"""
Ideal 3-manifold triangulations and the objects derived from a 4D triangulation.

* :func:`vertex_link` - the boundary component attached to a vertex class,
  triangulated by one tetrahedron per (simplex, vertex) slot.
* :func:`cusp_surface4` - the flat surface over which a cusp section of the
  4-manifold fibres, one triangle per (simplex, edge) slot.
* :func:`cusp_link_surface` - the cusp torus/Klein bottle of a 3D ideal
  triangulation, one triangle per (tetrahedron, vertex) slot.
* :func:`tetrahedral_certificate` - edge valences all 6 with trivial edge
  returns, i.e. the triangulation can be realised by regular ideal tetrahedra.
"""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal

from .core4 import Triangulation4, edge_classes, vertex_classes
from .numeric import V_TET_DECIMAL, render
from .perm import Perm4
from .surface2 import SurfaceType, TriangulatedSurface, classify_components
from .triangulation import CellSlot, RidgeCycle, Triangulation

__all__ = [
    "EdgeCycle3", "Perm4", "TetrahedralCertificate", "Triangulation3", "V_TET",
    "cusp_link_surface", "cusp_surface4", "edge_cycles3", "tetrahedral_certificate",
    "vertex_classes3", "vertex_link", "volume3", "volume3_display",
]

#: Volume of the regular ideal hyperbolic tetrahedron, 3 * Lobachevsky(pi/3).
V_TET = 1.0149416064096536


class EdgeCycle3(RidgeCycle):
    """The tetrahedron edges glued around one edge of a 3D triangulation."""

    @property
    def valence(self) -> int:
        return self.length


class Triangulation3(Triangulation):
    dimension = 3
    cycle_class = EdgeCycle3

    @property
    def num_tetrahedra(self) -> int:
        return self.size


def _resolve_class(classes, cls):
    if isinstance(cls, int):
        return classes[cls]
    normalized = tuple(sorted(CellSlot(s, tuple(L)) for s, L in cls))
    if normalized not in classes:
        raise ValueError("not a class of the partition")
    return normalized


def vertex_link(t: Triangulation4, cls, allow_partial: bool = False) -> Triangulation3:
    """Link of a vertex class, given as a class tuple or its index in :func:`vertex_classes`."""
    cls = _resolve_class(vertex_classes(t, allow_partial=allow_partial), cls)
    n, gluings = t.link_gluings(cls, allow_partial=allow_partial)
    return Triangulation3(n, gluings)


def vertex_classes3(t3: Triangulation3) -> list[tuple[CellSlot, ...]]:
    return t3.cell_classes(1)


def edge_cycles3(t3: Triangulation3) -> list[EdgeCycle3]:
    return t3.ridge_cycles()


def cusp_link_surface(t3: Triangulation3, vclass) -> TriangulatedSurface:
    """Cross-section of the cusp at a vertex class of a closed 3D triangulation."""
    cls = _resolve_class(vertex_classes3(t3), vclass)
    n, gluings = t3.link_gluings(cls)
    return TriangulatedSurface.from_perm_gluings(n, gluings)


def cusp_surface4(t: Triangulation4, eclass) -> TriangulatedSurface:
    """Base surface of the cusp attached to an edge class of a closed 4D triangulation.

    Each triangle's corners are the 2-faces of its simplex containing the
    edge, so corner valences are the lengths of the face cycles through them
    whenever the return maps are trivial.
    """
    cls = _resolve_class(edge_classes(t), eclass)
    n, gluings = t.link_gluings(cls)
    return TriangulatedSurface.from_perm_gluings(n, gluings)


def volume3(t3: Triangulation3) -> Decimal:
    """Volume when every tetrahedron is realised as a regular ideal one.

    Computed from a 50-digit value of the tetrahedron volume; ``render`` it
    for the 17-digit display form.
    """
    return t3.num_tetrahedra * V_TET_DECIMAL


def volume3_display(t3: Triangulation3) -> str:
    return render(volume3(t3))


@dataclass(frozen=True)
class TetrahedralCertificate:
    all_valence_six: bool
    all_returns_trivial: bool
    orientable: bool
    num_cusps: int
    cusp_surfaces: tuple[SurfaceType, ...]
    volume: Decimal
    edge_valences: tuple[int, ...]
    num_flipped_edges: int

    @property
    def granted(self) -> bool:
        return self.all_valence_six and self.all_returns_trivial

    def as_dict(self) -> dict:
        return {
            "granted": self.granted,
            "all_valence_six": self.all_valence_six,
            "all_returns_trivial": self.all_returns_trivial,
            "num_flipped_edges": self.num_flipped_edges,
            "edge_valences": list(self.edge_valences),
            "orientable": self.orientable,
            "num_cusps": self.num_cusps,
            "cusp_surfaces": [str(s) for s in self.cusp_surfaces],
            "volume": render(self.volume),
        }


def tetrahedral_certificate(t3: Triangulation3) -> TetrahedralCertificate:
    cycles = edge_cycles3(t3)
    cusps = []
    vclasses = vertex_classes3(t3)
    for cls in vclasses:
        cusps.extend(classify_components(cusp_link_surface(t3, cls)))
    return TetrahedralCertificate(
        all_valence_six=all(c.valence == 6 for c in cycles),
        all_returns_trivial=all(c.trivial_return for c in cycles),
        orientable=t3.orientation() is not None,
        num_cusps=len(vclasses),
        cusp_surfaces=tuple(cusps),
        volume=volume3(t3),
        edge_valences=tuple(c.valence for c in cycles),
        num_flipped_edges=sum(not c.trivial_return for c in cycles),
    )

