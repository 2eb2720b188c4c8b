"""
Combinatorial isomorphism, canonical signatures and symmetries.

Works for triangulations of any dimension.  An isomorphism sends simplex
``s`` of the source to ``simplex_map[s]`` of the target and relabels it by
``perms[s]``; it must carry every gluing onto a gluing and every unpaired
facet onto an unpaired facet.

Signature format
----------------
For a connected triangulation the signature is::

    <dimension>:<num_simplices>:<tok>,<tok>,...

with one token per (simplex, facet) of the canonical relabelling, simplices
in canonical order and facets ``0..d`` within each.  A token is
``<j>.<images>``: the facet is glued to canonical simplex ``j`` by the
permutation whose images (single decimal digits) are ``images``; an unpaired
facet is written ``_``.  The canonical relabelling is the breadth-first one,
over all choices of root simplex and root label permutation, whose integer
code (``j + 1`` then the images per facet; zeros for unpaired facets) is
lexicographically least.  Disconnected triangulations get the sorted
component signatures joined by ``+``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm import Perm
from .triangulation import Triangulation, TriangulationError

PRESERVES = "preserves"
REVERSES = "reverses"
UNDEFINED = "undefined"


@dataclass(frozen=True)
class Isomorphism:
    simplex_map: tuple[int, ...]
    perms: tuple[Perm, ...]
    orientation_effect: str = UNDEFINED

    def __call__(self, simplex: int) -> int:
        return self.simplex_map[simplex]

    def compose(self, first: Isomorphism) -> Isomorphism:
        """``self`` after ``first``."""
        simplex_map = tuple(self.simplex_map[first.simplex_map[s]]
                            for s in range(len(first.simplex_map)))
        perms = tuple(self.perms[first.simplex_map[s]] * first.perms[s]
                      for s in range(len(first.simplex_map)))
        return Isomorphism(simplex_map, perms, _compose_effects(self.orientation_effect,
                                                                first.orientation_effect))

    def is_identity(self) -> bool:
        return (all(i == s for i, s in enumerate(self.simplex_map))
                and all(p.is_identity() for p in self.perms))

    def describe(self) -> str:
        return " ".join(f"{s}->{t}[{p}]" for s, (t, p) in
                        enumerate(zip(self.simplex_map, self.perms)))


def _compose_effects(a: str, b: str) -> str:
    if UNDEFINED in (a, b):
        return UNDEFINED
    return PRESERVES if a == b else REVERSES


def _check_pair(a: Triangulation, b: Triangulation) -> None:
    if a.dimension != b.dimension:
        raise TriangulationError(
            f"dimension mismatch: {a.dimension} vs {b.dimension}")
    a.require_valid(closed=False)
    b.require_valid(closed=False)


def _extend(a: Triangulation, b: Triangulation, root: int, target: int, perm: Perm,
            used: set[int]) -> dict[int, tuple[int, Perm]] | None:
    """Propagate root -> (target, perm) over the component of ``root``."""
    d = a.dimension
    assign = {root: (target, perm)}
    taken = set(used) | {target}
    if target in used:
        return None
    queue = [root]
    head = 0
    while head < len(queue):
        s = queue[head]
        head += 1
        t, sigma = assign[s]
        for f in range(d + 1):
            src = a.adjacent(s, f)
            dst = b.adjacent(t, sigma[f])
            if src is None or dst is None:
                if src is not dst:
                    return None
                continue
            (s2, _), p = src
            (t2, _), q = dst
            # labels of s2 -> labels of t2, forced by the gluings
            sigma2 = q * sigma * p.inverse()
            if s2 in assign:
                if assign[s2] != (t2, sigma2):
                    return None
                continue
            if t2 in taken:
                return None
            assign[s2] = (t2, sigma2)
            taken.add(t2)
            queue.append(s2)
    return assign


def _effect(a: Triangulation, b: Triangulation, assign) -> str:
    oa, ob = a.orientation(), b.orientation()
    if oa is None or ob is None:
        return UNDEFINED
    signs = {oa[s] * ob[t] * p.sign() for s, (t, p) in assign.items()}
    if len(signs) != 1:
        return UNDEFINED
    return PRESERVES if signs.pop() == 1 else REVERSES


def _isomorphisms(a: Triangulation, b: Triangulation, first_only: bool):
    """Isomorphisms of two connected triangulations, in seed order."""
    if a.size != b.size:
        return
    perms = a.perm_class().all()
    for target in range(b.size):
        for perm in perms:
            assign = _extend(a, b, 0, target, perm, set())
            if assign is not None and len(assign) == a.size:
                yield assign
                if first_only:
                    return


def _subtriangulation(t: Triangulation, simplices) -> Triangulation:
    index = {s: i for i, s in enumerate(simplices)}
    gluings = [(index[g.source.simplex], g.source.facet, index[g.target.simplex],
                g.target.facet, g.perm.images)
               for g in t.gluings if g.source.simplex in index]
    return type(t)(len(simplices), gluings)


def isomorphic(a: Triangulation, b: Triangulation) -> Isomorphism | None:
    """First isomorphism ``a -> b`` in seed order, or ``None``.

    Seeds send the least simplex of each component of ``a`` to target
    simplices in ascending order, with label permutations in lexicographic
    order; components of ``a`` are matched greedily to components of ``b``.
    """
    _check_pair(a, b)
    if a.size != b.size:
        return None
    comps_a, comps_b = a.components(), b.components()
    if sorted(map(len, comps_a)) != sorted(map(len, comps_b)):
        return None
    perms = a.perm_class().all()
    assign = {}
    used = set()
    for comp in comps_a:
        found = None
        for other in comps_b:
            if len(other) != len(comp) or other[0] in used:
                continue
            for target in other:
                for perm in perms:
                    found = _extend(a, b, comp[0], target, perm, used)
                    if found is not None:
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            return None
        assign.update(found)
        used.update(t for t, _ in found.values())
    simplex_map = tuple(assign[s][0] for s in range(a.size))
    perm_list = tuple(assign[s][1] for s in range(a.size))
    return Isomorphism(simplex_map, perm_list, _effect(a, b, assign))


def symmetries(t: Triangulation) -> list[Isomorphism]:
    """All combinatorial automorphisms of a connected triangulation."""
    t.require_valid(closed=False)
    if len(t.components()) != 1:
        raise TriangulationError("symmetries needs a connected triangulation")
    out = []
    for assign in _isomorphisms(t, t, first_only=False):
        out.append(Isomorphism(
            tuple(assign[s][0] for s in range(t.size)),
            tuple(assign[s][1] for s in range(t.size)),
            _effect(t, t, assign)))
    return out


def _canonical_code(t: Triangulation, root: int, perm: Perm, best: list[int] | None):
    """Integer code of the BFS relabelling from ``root`` with labels renamed by ``perm``.

    Returns ``None`` as soon as the code is known to exceed ``best``.
    """
    d = t.dimension
    order = [root]
    new_index = {root: 0}
    relabel = {root: perm}
    code = []
    tied = best is not None
    pos = 0
    for s in order:
        sigma = relabel[s]
        sigma_inv = sigma.inverse()
        for f in range(d + 1):
            nb = t.adjacent(s, sigma_inv[f])
            if nb is None:
                chunk = [0] * (d + 2)
            else:
                (s2, _), p = nb
                if s2 not in new_index:
                    new_index[s2] = len(order)
                    order.append(s2)
                    # labels of s2 are renamed through the gluing back into s
                    relabel[s2] = sigma * p.inverse()
                glue = relabel[s2] * p * sigma_inv
                chunk = [new_index[s2] + 1, *glue.images]
            for x in chunk:
                if tied:
                    if x > best[pos]:
                        return None
                    if x < best[pos]:
                        tied = False
                code.append(x)
                pos += 1
    return code


def _render(d: int, n: int, code: list[int]) -> str:
    step = d + 2
    tokens = []
    for i in range(0, len(code), step):
        chunk = code[i:i + step]
        if chunk[0] == 0:
            tokens.append("_")
        else:
            tokens.append(f"{chunk[0] - 1}." + "".join(map(str, chunk[1:])))
    return f"{d}:{n}:" + ",".join(tokens)


def _connected_signature(t: Triangulation) -> str:
    best = None
    perms = t.perm_class().all()
    for root in range(t.size):
        for perm in perms:
            code = _canonical_code(t, root, perm, best)
            if code is not None:
                best = code
    return _render(t.dimension, t.size, best)


def signature(t: Triangulation) -> str:
    t.require_valid(closed=False)
    comps = t.components()
    if len(comps) == 1:
        return _connected_signature(t)
    return "+".join(sorted(_connected_signature(_subtriangulation(t, c)) for c in comps))
