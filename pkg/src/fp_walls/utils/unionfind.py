from typing import Generic, Hashable, Iterable, TypeVar

K = TypeVar("K", bound=Hashable)


class UnionFind(Generic[K]):
    """Union-find over hashable keys with path compression and union by size"""

    def __init__(self, keys: Iterable[K] = ()):
        self.parents: dict[K, K] = {}
        self.sizes: dict[K, int] = {}
        self.num_components = 0
        for key in keys:
            self.add(key)

    def add(self, key: K) -> None:
        if key in self.parents:
            return
        self.parents[key] = key
        self.sizes[key] = 1
        self.num_components += 1

    def find(self, key: K) -> K:
        root = key
        while root != self.parents[root]:
            root = self.parents[root]
        # compress the path so every element points to the root
        while key != root:
            self.parents[key], key = root, self.parents[key]
        return root

    def union(self, a: K, b: K) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if self.sizes[ra] < self.sizes[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        self.sizes[ra] += self.sizes.pop(rb)
        self.num_components -= 1
        return True

    def connected(self, a: K, b: K) -> bool:
        return self.find(a) == self.find(b)

    def component_size(self, key: K) -> int:
        return self.sizes[self.find(key)]

    def components(self) -> list[list[K]]:
        groups: dict[K, list[K]] = {}
        for key in self.parents:
            groups.setdefault(self.find(key), []).append(key)
        return list(groups.values())
