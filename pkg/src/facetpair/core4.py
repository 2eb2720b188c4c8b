"""
Four-dimensional facet-pairing triangulations.

Each 4-simplex stands for one ideal rectified 5-cell, whose octahedral
facets are glued according to the facet pairings.  Labels are 0-based: a
construction written with vertex labels ``1..5`` uses ``0..4`` here, so its
vertex ``5`` is label ``4``.

The combinatorial checks live here: closedness, face cycles and their
return maps (trivial returns make the glued complex a manifold; length-six
cycles make it hyperbolic), orientability, vertex classes (boundary
components), edge classes (cusps) and the exact volume/Euler arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
import math

from .numeric import pi_squared_multiple, render
from .perm import Perm5
from .triangulation import (
    CellSlot,
    FacetSlot,
    Gluing,
    NotClosedError,
    RidgeCycle,
    RidgeSlot,
    Triangulation,
    TriangulationError,
    ValidationReport,
)

__all__ = [
    "ExactVolume", "FaceCycle", "FaceSlot", "FacetSlot", "Gluing", "NotClosedError",
    "Perm5", "Triangulation4", "TriangulationError", "ValidationReport",
    "edge_classes", "euler_characteristic", "euler_warning", "exact_volume",
    "face_cycles", "is_manifold", "is_six_valent", "orientability", "trace_face_cycle",
    "validate", "vertex_classes",
]

#: A 2-face of a 4-simplex, named by the two labels it omits.
FaceSlot = RidgeSlot


class FaceCycle(RidgeCycle):
    """A face cycle: the 2-face slots glued to one another around a 2-cell."""


class Triangulation4(Triangulation):
    dimension = 4
    cycle_class = FaceCycle

    @property
    def num_simplices(self) -> int:
        return self.size


def validate(t: Triangulation4) -> ValidationReport:
    return t.validate()


def face_cycles(t: Triangulation4) -> list[FaceCycle]:
    """Face cycles of a closed triangulation, ordered by their least face slot.

    Raises :class:`NotClosedError` (listing the unpaired slots) on partial input.
    """
    return t.ridge_cycles()


def trace_face_cycle(t: Triangulation4, slot: FaceSlot, exit_facet: int):
    """Traverse one face cycle from an arbitrary slot and direction.

    Returns ``(slots, return_map)``; useful for checking that the return
    class does not depend on where the traversal starts.
    """
    return t.trace_ridge(slot[0], tuple(slot[1]), exit_facet)


def is_manifold(t: Triangulation4) -> bool:
    return all(c.trivial_return for c in face_cycles(t))


def is_six_valent(t: Triangulation4) -> bool:
    return all(c.length == 6 for c in face_cycles(t))


def orientability(t: Triangulation4) -> tuple[int, ...] | None:
    """A sign per simplex making every pairing orientation-reversing, if one exists."""
    return t.orientation()


def vertex_classes(t: Triangulation4, allow_partial: bool = False) -> list[tuple[CellSlot, ...]]:
    """Classes of (simplex, vertex) slots; the boundary components of the glued manifold."""
    return t.cell_classes(1, allow_partial=allow_partial)


def edge_classes(t: Triangulation4, allow_partial: bool = False) -> list[tuple[CellSlot, ...]]:
    """Classes of (simplex, edge) slots; the cusps of the glued manifold."""
    return t.cell_classes(2, allow_partial=allow_partial)


@dataclass(frozen=True)
class ExactVolume:
    """Volume as an exact rational multiple of pi squared."""

    coefficient: Fraction

    @property
    def value(self) -> float:
        return float(self.coefficient) * math.pi ** 2

    def display(self) -> str:
        """Decimal value to 17 significant digits."""
        return render(pi_squared_multiple(self.coefficient))

    def __str__(self) -> str:
        return f"{self.coefficient}*pi^2"


#: Volume of the ideal hyperbolic rectified 5-cell, in units of pi^2.
RECTIFIED_5CELL_VOLUME = Fraction(2, 9)


def exact_volume(t: Triangulation4) -> ExactVolume:
    t.require_valid()
    return ExactVolume(t.num_simplices * RECTIFIED_5CELL_VOLUME)


def euler_characteristic(t: Triangulation4) -> Fraction:
    """Euler characteristic from volume = (4 pi^2 / 3) * chi, i.e. N/6."""
    return exact_volume(t).coefficient * Fraction(3, 4)


def euler_warning(t: Triangulation4) -> str | None:
    """A warning when chi is not an integer: such a triangulation cannot be
    six-valent with trivial returns."""
    chi = euler_characteristic(t)
    if chi.denominator == 1:
        return None
    return (f"euler characteristic {chi} is not an integer: {t.num_simplices} simplices "
            "cannot form a 6-valent triangulation with trivial return maps "
            "(needs a multiple of 6)")
