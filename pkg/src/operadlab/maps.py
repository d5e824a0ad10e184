"""
Maps from permutations to planar binary trees.

``tonks_map`` is the production map (evaluation of the head-insertion
encoding of the reversed permutation). ``phihat``, ``varphi`` and
``loday_ronco`` are separate recursions; none of them calls another map, so
agreement between them is a real check rather than an identity.
"""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Callable, Iterable
from dataclasses import dataclass

from scipy.cluster.hierarchy import DisjointSet

from .combinatorics import (
    Permutation,
    as_permutation,
    permutations,
    split_below_above,
    standardize,
    swap_adjacent,
)
from .encodings import g_map
from .errors import PositionError, ResourceLimitError
from .trees import COROLLA, LEAF, BinaryTree, Node, graft_at

__all__ = [
    "loday_ronco", "phihat", "varphi", "tonks_map", "tonks_independent",
    "independent_positions", "TonksClassPartition", "tonks_classes", "fibers",
    "DEFAULT_MAX_CLASSES_N", "MAPS",
]

DEFAULT_MAX_CLASSES_N = 8


def loday_ronco(perm: Iterable[int] | str) -> BinaryTree:
    """Split at the largest entry and graft the two standardized sides."""
    return _loday_ronco(as_permutation(perm))


def _loday_ronco(perm: Permutation) -> BinaryTree:
    if not perm:
        return LEAF
    k = perm.index(len(perm))
    return Node(_loday_ronco(standardize(perm[:k])), _loday_ronco(standardize(perm[k + 1:])))


def phihat(perm: Iterable[int] | str) -> BinaryTree:
    """Graft a corolla at leaf ``perm[0]`` of the image of the standardized tail."""
    return _phihat(as_permutation(perm))


def _phihat(perm: Permutation) -> BinaryTree:
    if not perm:
        return LEAF
    if len(perm) == 1:
        return COROLLA
    return graft_at(_phihat(standardize(perm[1:])), perm[0], COROLLA)


def varphi(perm: Iterable[int] | str) -> BinaryTree:
    """Split the entries around the last one and graft the two sides at a new root."""
    return _varphi(as_permutation(perm))


def _varphi(perm: Permutation) -> BinaryTree:
    if not perm:
        return LEAF
    below, above = split_below_above(perm, perm[-1])
    return Node(_varphi(standardize(below)), _varphi(standardize(above)))


def tonks_map(perm: Iterable[int] | str) -> BinaryTree:
    perm = as_permutation(perm)
    return g_map(perm) if perm else LEAF


MAPS: dict[str, Callable[[Iterable[int] | str], BinaryTree]] = {
    "phi": tonks_map,
    "psi": loday_ronco,
    "phihat": phihat,
    "varphi": varphi,
    "g": tonks_map,
}


def tonks_independent(perm: Iterable[int] | str, i: int) -> bool:
    """Whether the entries at positions ``i, i+1`` have a later entry strictly between them."""
    perm = as_permutation(perm)
    if not 1 <= i < len(perm):
        raise PositionError(f"position {i} outside 1..{len(perm) - 1}")
    lo, hi = sorted(perm[i - 1:i + 1])
    return any(lo < x < hi for x in perm[i + 1:])


def independent_positions(perm: Permutation) -> list[int]:
    return [i for i in range(1, len(perm)) if tonks_independent(perm, i)]


@dataclass(frozen=True)
class TonksClassPartition:
    """Connected components of S_n under Tonks-independent adjacent swaps.

    ``classes[k]`` is sorted lexicographically and ``classes`` is ordered by
    representative (the least member); ``trees[k]`` is the common image.
    """

    n: int
    classes: tuple[tuple[Permutation, ...], ...]
    trees: tuple[BinaryTree, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def representatives(self) -> list[Permutation]:
        return [c[0] for c in self.classes]

    def class_index(self, perm: Iterable[int] | str) -> int:
        return self._index()[as_permutation(perm)]

    def class_of(self, perm: Iterable[int] | str) -> tuple[Permutation, ...]:
        return self.classes[self.class_index(perm)]

    def tree_of_class(self) -> dict[tuple[Permutation, ...], BinaryTree]:
        return dict(zip(self.classes, self.trees))

    def _index(self) -> dict[Permutation, int]:
        cached = self.__dict__.get("_index_cache")
        if cached is None:
            cached = {p: k for k, c in enumerate(self.classes) for p in c}
            object.__setattr__(self, "_index_cache", cached)
        return cached


def tonks_classes(n: int, max_n: int = DEFAULT_MAX_CLASSES_N) -> TonksClassPartition:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > max_n:
        raise ResourceLimitError(f"S_{n} enumeration exceeds the limit n <= {max_n}")
    perms = list(permutations(n))
    components = DisjointSet(perms)
    for pi in perms:
        for i in independent_positions(pi):
            components.merge(pi, swap_adjacent(pi, i))
    classes = sorted(tuple(sorted(c)) for c in components.subsets())
    trees = tuple(tonks_map(c[0]) for c in classes)
    return TonksClassPartition(n, tuple(classes), trees)


def fibers(tree_map: Callable[[Permutation], BinaryTree], n: int) -> list[tuple[Permutation, ...]]:
    """Preimages of ``tree_map`` on S_n, each sorted, ordered by least member."""
    groups: dict[BinaryTree, list[Permutation]] = defaultdict(list)
    for pi in permutations(n):
        groups[tree_map(pi)].append(pi)
    return sorted(tuple(g) for g in groups.values())
