class UnionFind:
    """Disjoint sets over hashable items, with path halving and union by size."""

    def __init__(self, items=()):
        self._parent = {}
        self._size = {}
        for x in items:
            self.add(x)

    def add(self, x):
        if x not in self._parent:
            self._parent[x] = x
            self._size[x] = 1

    def find(self, x):
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a, b) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self._size[ra] < self._size[rb]:
            ra, rb = rb, ra
        self._parent[rb] = ra
        self._size[ra] += self._size[rb]
        return True

    def classes(self) -> list[tuple]:
        """Classes as sorted tuples, ordered by their least member."""
        groups = {}
        for x in self._parent:
            groups.setdefault(self.find(x), []).append(x)
        return sorted((tuple(sorted(g)) for g in groups.values()), key=lambda g: g[0])
