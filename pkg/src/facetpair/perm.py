"""
Permutations of small label sets.

A permutation is stored by its images: ``p[i]`` is the image of label ``i``.
Composition follows function notation, so ``(p * q)[i] == p[q[i]]``.
"""
from __future__ import annotations

from itertools import permutations


class Perm:
    """An immutable bijection of ``{0, ..., n-1}``."""

    __slots__ = ("_images",)

    #: Fixed degree enforced by subclasses; ``None`` accepts any degree.
    degree: int | None = None

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if self.degree is not None and len(images) != self.degree:
            raise ValueError(
                f"{type(self).__name__} needs {self.degree} images, got {len(images)}")
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images}")
        self._images = images

    @classmethod
    def identity(cls, n: int | None = None) -> Perm:
        n = cls.degree if n is None else n
        return cls(range(n))

    @classmethod
    def all(cls, n: int | None = None) -> list[Perm]:
        """All permutations of degree ``n`` in lexicographic order of images."""
        n = cls.degree if n is None else n
        return [cls(p) for p in permutations(range(n))]

    @classmethod
    def transposition(cls, i: int, j: int, n: int | None = None) -> Perm:
        n = cls.degree if n is None else n
        images = list(range(n))
        images[i], images[j] = j, i
        return cls(images)

    @property
    def images(self) -> tuple[int, ...]:
        return self._images

    def __getitem__(self, i: int) -> int:
        return self._images[i]

    def __len__(self) -> int:
        return len(self._images)

    def __iter__(self):
        return iter(self._images)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Perm):
            return NotImplemented
        return self._images == other._images

    def __lt__(self, other: Perm) -> bool:
        return self._images < other._images

    def __hash__(self) -> int:
        return hash(self._images)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self._images)})"

    def __str__(self) -> str:
        return "".join(map(str, self._images)) if len(self) <= 10 else repr(self)

    def __mul__(self, other: Perm) -> Perm:
        if len(self) != len(other):
            raise ValueError("cannot compose permutations of different degree")
        return type(self)(self._images[i] for i in other._images)

    def inverse(self) -> Perm:
        inv = [0] * len(self._images)
        for i, j in enumerate(self._images):
            inv[j] = i
        return type(self)(inv)

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self._images))

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its least element, fixed points included."""
        seen = set()
        out = []
        for start in range(len(self._images)):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self._images[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self._images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        # each k-cycle is a product of k-1 transpositions
        odd = sum(len(c) - 1 for c in self.cycles()) % 2
        return -1 if odd else 1


class Perm3(Perm):
    degree = 3


class Perm4(Perm):
    degree = 4


class Perm5(Perm):
    degree = 5


_CLASS_NAMES = {
    (1,): "identity",
    (1, 1): "identity",
    (2,): "transposition",
    (1, 1, 1): "identity",
    (2, 1): "transposition",
    (3,): "3-cycle",
}


def conjugacy_class(p: Perm) -> str:
    """Name of the conjugacy class of ``p``: identity, transposition, 3-cycle, ...

    Classes without a short name are spelled by their cycle type, e.g. ``"type(2,2)"``.
    """
    ct = p.cycle_type()
    try:
        return _CLASS_NAMES[ct]
    except KeyError:
        if all(c == 1 for c in ct):
            return "identity"
        return "type(" + ",".join(str(c) for c in ct if c > 1) + ")"


def perm_class_for_degree(n: int) -> type[Perm]:
    return {3: Perm3, 4: Perm4, 5: Perm5}.get(n, Perm)
