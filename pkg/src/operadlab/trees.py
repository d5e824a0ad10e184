"""
Planar binary trees, leaf grafting and the Tamari order.

A tree is either the trivial tree :data:`LEAF` (written ``*``) or a
:class:`Node` with a left and right subtree. Trees are immutable, hashable
and compare structurally, so they can be used as dictionary keys and set
members. Their ``str`` is the canonical text format::

    tree := "*" | "(" tree "," tree ")"

The Tamari comparison caches one up-set per source tree behind
``functools.lru_cache``, which is safe under concurrent use from several
threads (a duplicate insert just recomputes the same frozenset).
"""

from __future__ import annotations

from collections.abc import Iterator
from functools import lru_cache
from math import comb

from .errors import LeafIndexError, ParseError, ResourceLimitError, SizeMismatchError

__all__ = [
    "BinaryTree", "Leaf", "Node", "LEAF", "COROLLA",
    "graft_root", "graft_at", "rotations", "tamari_upset", "tamari_leq",
    "enumerate_trees", "catalan", "left_comb", "right_comb",
    "parse_tree", "format_tree", "DEFAULT_MAX_TREE_SIZE",
]

DEFAULT_MAX_TREE_SIZE = 12


class BinaryTree:
    """Common base of :class:`Leaf` and :class:`Node`."""

    __slots__ = ()
    internal_nodes: int

    @property
    def leaves(self) -> int:
        return self.internal_nodes + 1

    @property
    def is_leaf(self) -> bool:
        return isinstance(self, Leaf)


class Leaf(BinaryTree):
    __slots__ = ()
    internal_nodes = 0

    def __eq__(self, other):
        return isinstance(other, Leaf)

    def __hash__(self) -> int:
        return 0

    def __str__(self) -> str:
        return "*"

    def __repr__(self) -> str:
        return "LEAF"


class Node(BinaryTree):
    __slots__ = ("left", "right", "internal_nodes", "_hash")

    left: BinaryTree
    right: BinaryTree

    def __init__(self, left: BinaryTree, right: BinaryTree):
        if not (isinstance(left, BinaryTree) and isinstance(right, BinaryTree)):
            raise TypeError("Node children must be binary trees")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "internal_nodes", left.internal_nodes + right.internal_nodes + 1)
        object.__setattr__(self, "_hash", hash((left, right)))

    def __setattr__(self, name, value):
        raise AttributeError("binary trees are immutable")

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Node):
            return NotImplemented if not isinstance(other, BinaryTree) else False
        return (self._hash == other._hash and self.internal_nodes == other.internal_nodes
                and self.left == other.left and self.right == other.right)

    def __hash__(self) -> int:
        return self._hash

    def __reduce__(self):
        return (Node, (self.left, self.right))

    def __str__(self) -> str:
        return f"({self.left},{self.right})"

    def __repr__(self) -> str:
        return f"parse_tree({str(self)!r})"


LEAF = Leaf()
COROLLA = Node(LEAF, LEAF)


def graft_root(t1: BinaryTree, t2: BinaryTree) -> Node:
    """Attach ``t1`` and ``t2`` as the left and right subtrees of a new root."""
    return Node(t1, t2)


def graft_at(t: BinaryTree, i: int, s: BinaryTree) -> BinaryTree:
    """Replace the ``i``-th leaf of ``t`` (1-based, left to right) by ``s``."""
    if not 1 <= i <= t.leaves:
        raise LeafIndexError(f"leaf {i} outside 1..{t.leaves}")
    return _graft(t, i, s)


def _graft(t: BinaryTree, i: int, s: BinaryTree) -> BinaryTree:
    if isinstance(t, Leaf):
        return s
    left_leaves = t.left.leaves
    if i <= left_leaves:
        return Node(_graft(t.left, i, s), t.right)
    return Node(t.left, _graft(t.right, i - left_leaves, s))


def rotations(t: BinaryTree) -> set[BinaryTree]:
    """All trees one right rotation ``((X,Y),Z) -> (X,(Y,Z))`` above ``t``."""
    return set(_rotations(t))


def _rotations(t: BinaryTree) -> Iterator[BinaryTree]:
    if isinstance(t, Leaf):
        return
    if isinstance(t.left, Node):
        x, y, z = t.left.left, t.left.right, t.right
        yield Node(x, Node(y, z))
    for s in _rotations(t.left):
        yield Node(s, t.right)
    for s in _rotations(t.right):
        yield Node(t.left, s)


@lru_cache(maxsize=None)
def tamari_upset(t: BinaryTree) -> frozenset[BinaryTree]:
    """Every tree reachable from ``t`` by a chain of rotations, ``t`` included."""
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for s in frontier:
            for r in _rotations(s):
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    return frozenset(seen)


def tamari_leq(t1: BinaryTree, t2: BinaryTree) -> bool:
    if t1.internal_nodes != t2.internal_nodes:
        raise SizeMismatchError(
            f"trees have {t1.internal_nodes} and {t2.internal_nodes} internal nodes")
    return t2 in tamari_upset(t1)


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def enumerate_trees(n: int, max_n: int = DEFAULT_MAX_TREE_SIZE) -> list[BinaryTree]:
    """All ``catalan(n)`` trees with ``n`` internal nodes.

    Ordered by the size of the left subtree, then recursively by left and
    right subtree; the left comb comes first and the right comb last.
    """
    if n < 0:
        raise ValueError("tree size must be non-negative")
    if n > max_n:
        raise ResourceLimitError(f"Y_{n} has {catalan(n)} elements; limit is n <= {max_n}")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[BinaryTree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(n - 1, -1, -1):
        for left in _enumerate(k):
            for right in _enumerate(n - 1 - k):
                out.append(Node(left, right))
    return tuple(out)


def left_comb(n: int) -> BinaryTree:
    t = LEAF
    for _ in range(n):
        t = Node(t, LEAF)
    return t


def right_comb(n: int) -> BinaryTree:
    t = LEAF
    for _ in range(n):
        t = Node(LEAF, t)
    return t


def format_tree(t: BinaryTree) -> str:
    return str(t)


def parse_tree(text: str) -> BinaryTree:
    """Inverse of ``str`` on trees; whitespace is not allowed."""
    tree, pos = _parse(text, 0)
    if pos != len(text):
        raise ParseError(f"trailing input at offset {pos} in {text!r}")
    return tree


def _parse(text: str, pos: int) -> tuple[BinaryTree, int]:
    if pos >= len(text):
        raise ParseError(f"unexpected end of tree text {text!r}")
    if text[pos] == "*":
        return LEAF, pos + 1
    if text[pos] != "(":
        raise ParseError(f"expected '*' or '(' at offset {pos} in {text!r}")
    left, pos = _parse(text, pos + 1)
    if pos >= len(text) or text[pos] != ",":
        raise ParseError(f"expected ',' at offset {pos} in {text!r}")
    right, pos = _parse(text, pos + 1)
    if pos >= len(text) or text[pos] != ")":
        raise ParseError(f"expected ')' at offset {pos} in {text!r}")
    return Node(left, right), pos + 1
