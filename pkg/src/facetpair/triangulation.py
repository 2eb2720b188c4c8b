"""
Dimension-generic facet-pairing triangulations.

A triangulation of dimension ``d`` is a set of ``n`` labelled d-simplices
(labels ``0..d``) together with gluings between their facets.  Facet ``f`` of a
simplex is the facet *opposite* label ``f``.  A gluing from facet ``f`` of
simplex ``a`` to facet ``g`` of simplex ``b`` is a permutation ``p`` of the labels
with ``p[f] == g``; the other ``d`` labels of ``a`` go to the corresponding
labels of ``b``.  Every gluing is stored in both directions, the reverse one
carrying ``p.inverse()``.

:class:`Triangulation` values are immutable.  Structural problems found at
construction time are collected and reported by :meth:`Triangulation.validate`
rather than raised, so that broken inputs can still be inspected; every
operation past validation refuses to run on them.
"""
from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import ClassVar, Iterable, NamedTuple

from .perm import Perm, conjugacy_class, perm_class_for_degree
from .unionfind import UnionFind


class TriangulationError(ValueError):
    """Structural problem with a triangulation (bad gluing, wrong dimension, ...)."""


class NotClosedError(TriangulationError):
    """An operation needing a closed triangulation got one with unpaired facets."""

    def __init__(self, unpaired):
        self.unpaired = tuple(unpaired)
        listed = ", ".join(f"({s},{f})" for s, f in self.unpaired)
        super().__init__(f"not closed: {len(self.unpaired)} unpaired facet slot(s): {listed}")


class FacetSlot(NamedTuple):
    simplex: int
    facet: int


class RidgeSlot(NamedTuple):
    """A codimension-2 face of one simplex, named by the two labels it omits."""

    simplex: int
    omitted: tuple[int, int]


class CellSlot(NamedTuple):
    """A face of one simplex spanned by ``labels`` (a vertex, an edge, ...)."""

    simplex: int
    labels: tuple[int, ...]


@dataclass(frozen=True)
class Gluing:
    source: FacetSlot
    target: FacetSlot
    perm: Perm

    def inverse(self) -> Gluing:
        return Gluing(self.target, self.source, self.perm.inverse())

    def as_tuple(self) -> tuple:
        return (*self.source, *self.target, self.perm.images)


@dataclass(frozen=True)
class ValidationReport:
    closed: bool
    num_gluings: int
    unpaired: tuple[FacetSlot, ...]
    errors: tuple[str, ...]

    @property
    def valid(self) -> bool:
        return not self.errors


@dataclass(frozen=True)
class RidgeCycle:
    """A cycle of codimension-2 faces, anchored at its least slot.

    ``return_map`` acts on positions in the sorted vertex labels of the
    anchor slot: ``return_map[i] == j`` means the ``i``-th vertex of the
    anchor face comes back as its ``j``-th vertex after one full turn.
    """

    slots: tuple[RidgeSlot, ...]
    return_map: Perm

    @property
    def length(self) -> int:
        return len(self.slots)

    @property
    def return_class(self) -> str:
        return conjugacy_class(self.return_map)

    @property
    def trivial_return(self) -> bool:
        return self.return_map.is_identity()


def _coerce_gluing(g, perm_class) -> Gluing:
    if isinstance(g, Gluing):
        return Gluing(FacetSlot(*g.source), FacetSlot(*g.target), perm_class(g.perm.images))
    a, f, b, h, images = g
    return Gluing(FacetSlot(int(a), int(f)), FacetSlot(int(b), int(h)), perm_class(images))


class Triangulation:
    """Base class; concrete dimensions set :attr:`dimension`."""

    dimension: ClassVar[int] = 0
    cycle_class: ClassVar[type[RidgeCycle]] = RidgeCycle

    def __init__(self, size: int, gluings: Iterable = ()):
        if int(size) < 1:
            raise TriangulationError(f"a triangulation needs at least one simplex, got {size}")
        self._size = int(size)
        d = self.dimension
        perm_class = self.perm_class()
        adj = {}
        errors = []
        for raw in gluings:
            try:
                g = _coerce_gluing(raw, perm_class)
            except (TypeError, ValueError) as exc:
                raise TriangulationError(f"unparseable gluing {raw!r}: {exc}") from None
            (a, f), (b, h) = g.source, g.target
            if not (0 <= a < size and 0 <= b < size and 0 <= f <= d and 0 <= h <= d):
                errors.append(f"gluing ({a},{f})->({b},{h}) is out of range")
                continue
            if (a, f) == (b, h):
                errors.append(f"facet ({a},{f}) glued to itself")
                continue
            if g.perm[f] != h:
                errors.append(
                    f"gluing ({a},{f})->({b},{h}) maps label {f} to {g.perm[f]}, not {h}")
                continue
            fwd = (FacetSlot(b, h), g.perm)
            back = (FacetSlot(a, f), g.perm.inverse())
            old_fwd, old_back = adj.get((a, f)), adj.get((b, h))
            if old_fwd is None and old_back is None:
                adj[FacetSlot(a, f)] = fwd
                adj[FacetSlot(b, h)] = back
            elif old_fwd == fwd and old_back == back:
                continue  # same gluing listed again
            else:
                for slot in ((a, f), (b, h)):
                    if slot in adj:
                        errors.append(f"duplicate gluing on facet slot ({slot[0]},{slot[1]})")
        self._adj = adj
        self._errors = tuple(errors)

    @classmethod
    def perm_class(cls) -> type[Perm]:
        return perm_class_for_degree(cls.dimension + 1)

    # -- basic access -------------------------------------------------------

    @property
    def size(self) -> int:
        return self._size

    def adjacent(self, simplex: int, facet: int) -> tuple[FacetSlot, Perm] | None:
        """Where facet ``facet`` of ``simplex`` is glued, or ``None`` if unpaired."""
        return self._adj.get((simplex, facet))

    @property
    def gluings(self) -> tuple[Gluing, ...]:
        """Each gluing once, oriented from its lexicographically smaller slot."""
        out = []
        for slot in sorted(self._adj):
            target, perm = self._adj[slot]
            if slot < target:
                out.append(Gluing(slot, target, perm))
        return tuple(out)

    def unpaired(self) -> tuple[FacetSlot, ...]:
        return tuple(FacetSlot(s, f) for s in range(self._size)
                     for f in range(self.dimension + 1) if (s, f) not in self._adj)

    @property
    def is_closed(self) -> bool:
        return not self._errors and len(self._adj) == self._size * (self.dimension + 1)

    def validate(self) -> ValidationReport:
        unpaired = self.unpaired()
        return ValidationReport(
            closed=not unpaired and not self._errors,
            num_gluings=len(self._adj) // 2,
            unpaired=unpaired,
            errors=self._errors,
        )

    def require_valid(self, closed: bool = True) -> None:
        if self._errors:
            raise TriangulationError("; ".join(self._errors))
        if closed and len(self._adj) != self._size * (self.dimension + 1):
            raise NotClosedError(self.unpaired())

    def __eq__(self, other) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return (self._size == other._size and self._adj == other._adj
                and self._errors == other._errors)

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._size, self.gluings))

    def __repr__(self) -> str:
        return (f"{type(self).__name__}(size={self._size}, "
                f"gluings={len(self._adj) // 2}, closed={self.is_closed})")

    # -- connectivity, relabelling -----------------------------------------

    def components(self) -> list[tuple[int, ...]]:
        uf = UnionFind(range(self._size))
        for (s, _), (target, _) in self._adj.items():
            uf.union(s, target.simplex)
        return uf.classes()

    def relabeled(self, simplex_map, label_perms) -> Triangulation:
        """Rename simplex ``s`` to ``simplex_map[s]`` and its label ``x`` to ``label_perms[s][x]``."""
        pc = self.perm_class()
        sigma = [pc(p) for p in label_perms]
        new = []
        for g in self.gluings:
            (a, f), (b, h) = g.source, g.target
            perm = sigma[b] * g.perm * sigma[a].inverse()
            new.append((simplex_map[a], sigma[a][f], simplex_map[b], sigma[b][h], perm.images))
        return type(self)(self._size, new)

    def random_relabeled(self, rng: random.Random) -> Triangulation:
        simplex_map = list(range(self._size))
        rng.shuffle(simplex_map)
        labels = []
        for _ in range(self._size):
            p = list(range(self.dimension + 1))
            rng.shuffle(p)
            labels.append(p)
        return self.relabeled(simplex_map, labels)

    # -- classes of faces -------------------------------------------------

    def cell_classes(self, k: int, allow_partial: bool = False) -> list[tuple[CellSlot, ...]]:
        """Classes of k-label faces (k=1 vertices, k=2 edges, ...) under the gluings."""
        self.require_valid(closed=not allow_partial)
        d = self.dimension
        uf = UnionFind(CellSlot(s, L) for s in range(self._size)
                       for L in combinations(range(d + 1), k))
        for (s, f), ((s2, _), p) in self._adj.items():
            for L in combinations(range(d + 1), k):
                if f in L:
                    continue
                uf.union(CellSlot(s, L), CellSlot(s2, tuple(sorted(p[v] for v in L))))
        return uf.classes()

    # -- ridge cycles -------------------------------------------------------

    def trace_ridge(self, simplex: int, omitted: tuple[int, int],
                    exit_facet: int) -> tuple[tuple[RidgeSlot, ...], Perm]:
        """Walk the ridge cycle through one slot, leaving first through ``exit_facet``.

        Returns the slots in traversal order and the return map on positions
        of the starting face's sorted vertex labels.
        """
        self.require_valid()
        a, b = omitted
        if exit_facet == a:
            a, b = b, a
        elif exit_facet != b:
            raise ValueError(f"exit facet {exit_facet} does not contain the face omitting {omitted}")
        pc = self.perm_class()
        acc = pc.identity()
        start = (simplex, a, b)
        s, entry, exit_ = start
        slots = []
        while True:
            slots.append(RidgeSlot(s, (min(entry, exit_), max(entry, exit_))))
            (s2, f2), p = self._adj[(s, exit_)]
            acc = p * acc
            s, entry, exit_ = s2, f2, p[entry]
            if (s, entry, exit_) == start:
                break
        face = [v for v in range(self.dimension + 1) if v not in omitted]
        ret = perm_class_for_degree(len(face))([face.index(acc[v]) for v in face])
        return tuple(slots), ret

    def ridge_cycles(self) -> list[RidgeCycle]:
        """All ridge cycles; each is anchored at its least slot and leaves it
        through the larger of the two omitted labels."""
        self.require_valid()
        seen = set()
        cycles = []
        for s in range(self._size):
            for pair in combinations(range(self.dimension + 1), 2):
                if (s, pair) in seen:
                    continue
                slots, ret = self.trace_ridge(s, pair, pair[1])
                seen.update(slots)
                cycles.append(self.cycle_class(slots, ret))
        return cycles

    # -- orientation --------------------------------------------------------

    def orientation(self) -> tuple[int, ...] | None:
        """Signs ``s`` with ``s[a] * s[b] * sign(p) == -1`` across every gluing, or ``None``.

        Components are visited from their least simplex, which gets ``+1``;
        works on partial triangulations using the gluings present.
        """
        self.require_valid(closed=False)
        signs = [0] * self._size
        for root in range(self._size):
            if signs[root]:
                continue
            signs[root] = 1
            queue = deque([root])
            while queue:
                s = queue.popleft()
                for f in range(self.dimension + 1):
                    nb = self._adj.get((s, f))
                    if nb is None:
                        continue
                    (s2, _), p = nb
                    want = -signs[s] * p.sign()
                    if signs[s2] == 0:
                        signs[s2] = want
                        queue.append(s2)
                    elif signs[s2] != want:
                        return None
        return tuple(signs)

    # -- links ----------------------------------------------------------------

    def link_gluings(self, cls, allow_partial: bool = False) -> tuple[int, list[tuple]]:
        """Gluing data of the link of a class of faces.

        One cell per slot in ``cls``, in sorted slot order.  The cell's labels
        are the simplex labels outside the face, compressed in increasing
        order; its facets correspond to the simplex facets containing the face.
        Returns ``(num_cells, [(i, fi, j, fj, images), ...])`` with each
        gluing listed once.
        """
        cls = sorted(CellSlot(s, tuple(L)) for s, L in cls)
        k = len(cls[0].labels)
        if cls not in [list(c) for c in self.cell_classes(k, allow_partial=allow_partial)]:
            raise ValueError("not a class of the face partition")
        d = self.dimension
        index = {slot: i for i, slot in enumerate(cls)}
        out = []
        for i, (s, L) in enumerate(cls):
            comp = [v for v in range(d + 1) if v not in L]
            for f in comp:
                nb = self._adj.get((s, f))
                if nb is None:
                    continue
                (s2, f2), p = nb
                L2 = tuple(sorted(p[v] for v in L))
                j = index[CellSlot(s2, L2)]
                comp2 = [v for v in range(d + 1) if v not in L2]
                fi, fj = comp.index(f), comp2.index(f2)
                if (i, fi) > (j, fj):
                    continue
                out.append((i, fi, j, fj, [comp2.index(p[v]) for v in comp]))
        return len(cls), out
