"""Finite posets given by their cover relation, and the two orders of interest."""

from __future__ import annotations

from collections.abc import Callable, Hashable
from dataclasses import dataclass

from .combinatorics import permutations, weak_covers_right
from .trees import enumerate_trees, rotations

__all__ = ["Poset", "weak_order", "tamari_order"]


@dataclass(frozen=True)
class Poset:
    elements: tuple
    covers: frozenset

    def upper_covers(self, x: Hashable) -> list:
        return [b for a, b in self.covers if a == x]

    def leq(self, a: Hashable, b: Hashable) -> bool:
        up = self._up()
        seen, stack = {a}, [a]
        while stack:
            x = stack.pop()
            if x == b:
                return True
            for y in up.get(x, ()):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return False

    def minimal(self) -> list:
        targets = {b for _, b in self.covers}
        return [x for x in self.elements if x not in targets]

    def maximal(self) -> list:
        sources = {a for a, _ in self.covers}
        return [x for x in self.elements if x not in sources]

    def relabel(self, f: Callable) -> Poset:
        return Poset(tuple(f(x) for x in self.elements),
                     frozenset((f(a), f(b)) for a, b in self.covers))

    def _up(self) -> dict:
        cached = self.__dict__.get("_up_cache")
        if cached is None:
            cached = {}
            for a, b in self.covers:
                cached.setdefault(a, []).append(b)
            object.__setattr__(self, "_up_cache", cached)
        return cached


def weak_order(n: int) -> Poset:
    """Right weak order on S_n, elements in lexicographic order."""
    perms = tuple(permutations(n))
    return Poset(perms, frozenset((p, q) for p in perms for q in weak_covers_right(p)))


def tamari_order(n: int) -> Poset:
    trees = tuple(enumerate_trees(n))
    return Poset(trees, frozenset((t, r) for t in trees for r in rotations(t)))
