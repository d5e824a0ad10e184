"""
Indexed operadic terms, the two associativity axioms as replayable rewrite
steps, l-factors and evaluation to binary trees.

A term is a generator ``Gen(k)`` (written ``2^k``, arity 2) or a partial
composition ``Comp(A, n, B)`` (written ``(A o_n B)``) of arity
``|A| + |B| - 1``. Construction validates positions and rejects terms in which
a generator index occurs twice.

The two axioms, read left to right, are::

    assoc1:  (A o_n B) o_m C  ->  A o_n (B o_{m-n+1} C)     if n <= m < n + |B|
    assoc2:  (A o_n B) o_m C  ->  (A o_{m-|B|+1} C) o_n B   if n + |B| <= m

A :class:`RewriteStep` names an axiom, a direction, the path from the root to
the rewritten node and the ``(n, m)`` parameters of the left-hand side.
"""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from typing import Literal, Optional

from .errors import (
    CompositionPositionError,
    IndexOverlapError,
    InvalidPathError,
    NotLFactorError,
    ParseError,
    PatternMismatchError,
    SideConditionError,
    TermError,
)
from .trees import COROLLA, BinaryTree, graft_at

__all__ = [
    "Term", "Gen", "Comp", "compose", "evaluate", "eval_labeled", "shape_key",
    "parse_term", "format_term",
    "RewriteStep", "apply_rewrite", "replay", "applicable_steps", "subterm_at",
    "RootDecomposition", "is_l_factor", "normalize_chain", "normalize_l_factor",
    "rebuild", "eq_mod_I", "insertion_chain", "random_term", "enumerate_terms",
]

Axiom = Literal["assoc1", "assoc2"]
Direction = Literal["ltr", "rtl"]
Selector = Literal["head", "arg"]


class Term:
    """Base class of :class:`Gen` and :class:`Comp`."""

    __slots__ = ()
    arity: int
    indices: frozenset[int]
    size: int

    def __setattr__(self, name, value):
        raise AttributeError("terms are immutable")

    def __str__(self) -> str:
        return format_term(self)


class Gen(Term):
    __slots__ = ("index", "arity", "indices", "size", "_hash")

    def __init__(self, index: int):
        if isinstance(index, bool) or not isinstance(index, int) or index < 1:
            raise TermError(f"generator index must be a positive integer, got {index!r}")
        object.__setattr__(self, "index", index)
        object.__setattr__(self, "arity", 2)
        object.__setattr__(self, "indices", frozenset((index,)))
        object.__setattr__(self, "size", 1)
        object.__setattr__(self, "_hash", hash(("gen", index)))

    def __eq__(self, other):
        return isinstance(other, Gen) and other.index == self.index

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Gen, (self.index,))

    def __repr__(self):
        return f"Gen({self.index})"


class Comp(Term):
    __slots__ = ("head", "position", "arg", "arity", "indices", "size", "_hash")

    def __init__(self, head: Term, position: int, arg: Term):
        if not (isinstance(head, Term) and isinstance(arg, Term)):
            raise TypeError("Comp operands must be terms")
        if not 1 <= position <= head.arity:
            raise CompositionPositionError(
                f"position {position} outside 1..{head.arity} of {format_term(head)}")
        if not head.indices.isdisjoint(arg.indices):
            raise IndexOverlapError(
                f"indices {sorted(head.indices & arg.indices)} occur in both operands")
        object.__setattr__(self, "head", head)
        object.__setattr__(self, "position", position)
        object.__setattr__(self, "arg", arg)
        object.__setattr__(self, "arity", head.arity + arg.arity - 1)
        object.__setattr__(self, "indices", head.indices | arg.indices)
        object.__setattr__(self, "size", head.size + arg.size)
        object.__setattr__(self, "_hash", hash((head, position, arg)))

    def __eq__(self, other):
        if self is other:
            return True
        return (isinstance(other, Comp) and self._hash == other._hash
                and self.position == other.position
                and self.head == other.head and self.arg == other.arg)

    def __hash__(self):
        return self._hash

    def __reduce__(self):
        return (Comp, (self.head, self.position, self.arg))

    def __repr__(self):
        return f"parse_term({format_term(self)!r})"


def compose(a: Term, n: int, b: Term) -> Comp:
    """``a o_n b``; raises on a bad position or on shared indices."""
    return Comp(a, n, b)


# --- text format ---------------------------------------------------------

def format_term(t: Term) -> str:
    if isinstance(t, Gen):
        return f"2^{t.index}"
    return f"({format_term(t.head)} o_{t.position} {format_term(t.arg)})"


def parse_term(text: str) -> Term:
    """Parse ``term := "2^" int | "(" term " o_" int " " term ")"``."""
    term, pos = _parse_term(text, 0)
    if pos != len(text):
        raise ParseError(f"trailing input at offset {pos} in {text!r}")
    return term


def _parse_int(text: str, pos: int) -> tuple[int, int]:
    end = pos
    while end < len(text) and text[end].isdigit():
        end += 1
    if end == pos:
        raise ParseError(f"expected an integer at offset {pos} in {text!r}")
    return int(text[pos:end]), end


def _expect(text: str, pos: int, token: str) -> int:
    if not text.startswith(token, pos):
        raise ParseError(f"expected {token!r} at offset {pos} in {text!r}")
    return pos + len(token)


def _parse_term(text: str, pos: int) -> tuple[Term, int]:
    if text.startswith("2^", pos):
        k, pos = _parse_int(text, pos + 2)
        return Gen(k), pos
    pos = _expect(text, pos, "(")
    head, pos = _parse_term(text, pos)
    pos = _expect(text, pos, " o_")
    n, pos = _parse_int(text, pos)
    pos = _expect(text, pos, " ")
    arg, pos = _parse_term(text, pos)
    pos = _expect(text, pos, ")")
    return Comp(head, n, arg), pos


# --- evaluation ----------------------------------------------------------

def evaluate(t: Term) -> BinaryTree:
    """Forget indices; generators become 2-corollas and ``o_i`` grafts at leaf ``i``."""
    if isinstance(t, Gen):
        return COROLLA
    return graft_at(evaluate(t.head), t.position, evaluate(t.arg))


# internal nodes labelled by generator index: None for a leaf, else (index, left, right)
LabeledTree = Optional[tuple]


def eval_labeled(t: Term) -> LabeledTree:
    """Like :func:`evaluate` but every internal node keeps its generator index."""
    if isinstance(t, Gen):
        return (t.index, None, None)
    return _graft_labeled(eval_labeled(t.head), t.position, eval_labeled(t.arg))


def _graft_labeled(tree: LabeledTree, i: int, s: LabeledTree) -> LabeledTree:
    if tree is None:
        return s
    label, left, right = tree
    k = _count_leaves(left)
    if i <= k:
        return (label, _graft_labeled(left, i, s), right)
    return (label, left, _graft_labeled(right, i - k, s))


def _count_leaves(tree: LabeledTree) -> int:
    if tree is None:
        return 1
    return _count_leaves(tree[1]) + _count_leaves(tree[2])


def shape_key(t: Term) -> tuple | None:
    """Hashable key of the unindexed term underlying ``t``."""
    if isinstance(t, Gen):
        return None
    return (shape_key(t.head), t.position, shape_key(t.arg))


def eq_mod_I(t1: Term, t2: Term) -> bool:
    """Decide equality modulo the associativity axioms by comparing evaluations."""
    return evaluate(t1) == evaluate(t2)


# --- rewriting -----------------------------------------------------------

@dataclass(frozen=True)
class RewriteStep:
    axiom: Axiom
    direction: Direction
    path: tuple[Selector, ...]
    n: int
    m: int

    def inverse(self) -> RewriteStep:
        """The same axiom instance applied the other way round at the same node."""
        flipped = "rtl" if self.direction == "ltr" else "ltr"
        return RewriteStep(self.axiom, flipped, self.path, self.n, self.m)

    def __str__(self) -> str:
        arrow = "->" if self.direction == "ltr" else "<-"
        where = ".".join(self.path) or "root"
        return f"{self.axiom} {arrow} at {where} (n={self.n}, m={self.m})"


def subterm_at(t: Term, path: Sequence[str]) -> Term:
    for k, sel in enumerate(path):
        if not isinstance(t, Comp):
            raise InvalidPathError(f"path {tuple(path)} leaves the term after {k} steps")
        if sel == "head":
            t = t.head
        elif sel == "arg":
            t = t.arg
        else:
            raise InvalidPathError(f"unknown selector {sel!r}")
    return t


def _replace_at(t: Term, path: Sequence[str], new: Term) -> Term:
    if not path:
        return new
    if path[0] == "head":
        return Comp(_replace_at(t.head, path[1:], new), t.position, t.arg)
    return Comp(t.head, t.position, _replace_at(t.arg, path[1:], new))


def _rewrite_node(node: Term, step: RewriteStep) -> Term:
    n, m = step.n, step.m
    if step.axiom not in ("assoc1", "assoc2") or step.direction not in ("ltr", "rtl"):
        raise PatternMismatchError(f"unknown axiom or direction in {step}")
    if not isinstance(node, Comp):
        raise PatternMismatchError(f"{step}: addressed subterm is a generator")

    if step.direction == "ltr":
        # source (A o_n B) o_m C
        if not isinstance(node.head, Comp):
            raise PatternMismatchError(f"{step}: head of addressed node is not a composition")
        a, b, c = node.head.head, node.head.arg, node.arg
        if step.axiom == "assoc1" and not n <= m < n + b.arity:
            raise SideConditionError(f"{step}: assoc1 needs {n} <= {m} < {n + b.arity}")
        if step.axiom == "assoc2" and not n + b.arity <= m:
            raise SideConditionError(f"{step}: assoc2 needs {n + b.arity} <= {m}")
        if (node.head.position, node.position) != (n, m):
            raise PatternMismatchError(
                f"{step}: node has positions ({node.head.position}, {node.position})")
        if step.axiom == "assoc1":
            return Comp(a, n, Comp(b, m - n + 1, c))
        return Comp(Comp(a, m - b.arity + 1, c), n, b)

    if step.axiom == "assoc1":
        # source A o_n (B o_{m-n+1} C)
        if not isinstance(node.arg, Comp):
            raise PatternMismatchError(f"{step}: argument of addressed node is not a composition")
        a, b, c = node.head, node.arg.head, node.arg.arg
        if not n <= m < n + b.arity:
            raise SideConditionError(f"{step}: assoc1 needs {n} <= {m} < {n + b.arity}")
        if (node.position, node.arg.position) != (n, m - n + 1):
            raise PatternMismatchError(
                f"{step}: node has positions ({node.position}, {node.arg.position})")
        return Comp(Comp(a, n, b), m, c)

    # assoc2 source (A o_{m-|B|+1} C) o_n B
    if not isinstance(node.head, Comp):
        raise PatternMismatchError(f"{step}: head of addressed node is not a composition")
    a, c, b = node.head.head, node.head.arg, node.arg
    if not n + b.arity <= m:
        raise SideConditionError(f"{step}: assoc2 needs {n + b.arity} <= {m}")
    if (node.head.position, node.position) != (m - b.arity + 1, n):
        raise PatternMismatchError(
            f"{step}: node has positions ({node.head.position}, {node.position})")
    return Comp(Comp(a, n, b), m, c)


def apply_rewrite(t: Term, step: RewriteStep) -> Term:
    """Rewrite the subterm addressed by ``step.path`` with one axiom instance.

    Raises :class:`InvalidPathError`, :class:`PatternMismatchError` or
    :class:`SideConditionError`.
    """
    node = subterm_at(t, step.path)
    return _replace_at(t, step.path, _rewrite_node(node, step))


def replay(t: Term, trace: Sequence[RewriteStep]) -> Term:
    for step in trace:
        t = apply_rewrite(t, step)
    return t


def _node_steps(node: Term, path: tuple[Selector, ...]) -> Iterator[RewriteStep]:
    if not isinstance(node, Comp):
        return
    if isinstance(node.head, Comp):
        n, m, b = node.head.position, node.position, node.head.arg
        if n <= m < n + b.arity:
            yield RewriteStep("assoc1", "ltr", path, n, m)
        elif n + b.arity <= m:
            yield RewriteStep("assoc2", "ltr", path, n, m)
        # (A o_p C) o_n B with p > n is a right-hand side of assoc2
        p, n, b = node.head.position, node.position, node.arg
        if p > n:
            yield RewriteStep("assoc2", "rtl", path, n, p + b.arity - 1)
    if isinstance(node.arg, Comp):
        n = node.position
        yield RewriteStep("assoc1", "rtl", path, n, node.arg.position + n - 1)


def applicable_steps(t: Term) -> list[RewriteStep]:
    """Every axiom instance, in either direction, applicable somewhere in ``t``.

    Listed in preorder of the addressed node.
    """
    out: list[RewriteStep] = []
    stack: list[tuple[Term, tuple[Selector, ...]]] = [(t, ())]
    while stack:
        node, path = stack.pop()
        out.extend(_node_steps(node, path))
        if isinstance(node, Comp):
            stack.append((node.arg, path + ("arg",)))
            stack.append((node.head, path + ("head",)))
    return out


# --- l-factors and root decompositions -----------------------------------

@dataclass(frozen=True)
class RootDecomposition:
    """A term of shape ``(2^i o_2 right) o_1 left`` with either side optional."""

    root_index: int
    left: Optional[Term] = None
    right: Optional[Term] = None


def rebuild(d: RootDecomposition) -> Term:
    t: Term = Gen(d.root_index)
    if d.right is not None:
        t = Comp(t, 2, d.right)
    if d.left is not None:
        t = Comp(t, 1, d.left)
    return t


def insertion_chain(t: Term) -> Optional[tuple[int, list[tuple[int, int]]]]:
    """Split ``(..(2^i o_r1 2^x1)..) o_rk 2^xk`` into ``(i, [(r1, x1), ..])``.

    Returns None when some argument on the head spine is not a generator.
    """
    steps = []
    while isinstance(t, Comp):
        if not isinstance(t.arg, Gen):
            return None
        steps.append((t.position, t.arg.index))
        t = t.head
    steps.reverse()
    return t.index, steps


def is_l_factor(t: Term) -> Optional[int]:
    """Root index of ``t`` if it is an l-factor, otherwise None.

    An l-factor inserts each new generator ``2^j`` at the rank of ``j`` among
    the indices already present.
    """
    chain = insertion_chain(t)
    if chain is None:
        return None
    root, steps = chain
    present = [root]
    for r, x in steps:
        if r != 1 + sum(1 for y in present if y < x):
            return None
        present.append(x)
    return root


def normalize_chain(t: Term) -> tuple[RootDecomposition, list[RewriteStep]]:
    """Rewrite an insertion chain into root-decomposed form, recording each step.

    Insertions are processed innermost first. Each new generator lands either
    in the left block (one assoc1) or the right block (an assoc2 past the left
    block, then an assoc1 into the right one); a generator grafted directly on
    an empty side costs nothing. The sides stay insertion chains, so l-factors
    decompose into l-factors.
    """
    chain = insertion_chain(t)
    if chain is None:
        raise TermError(f"{format_term(t)} is not an insertion chain")
    root, steps = chain
    trace: list[RewriteStep] = []
    left: Optional[Term] = None
    right: Optional[Term] = None
    depth = len(steps)
    for r, x in steps:
        depth -= 1
        path: tuple[Selector, ...] = ("head",) * depth
        left_arity = left.arity if left is not None else 1
        if r <= left_arity:
            if left is None:
                left = Gen(x)
            else:
                trace.append(RewriteStep("assoc1", "ltr", path, 1, r))
                left = Comp(left, r, Gen(x))
        else:
            s = r - left_arity
            if left is not None:
                trace.append(RewriteStep("assoc2", "ltr", path, 1, r))
                inner = path + ("head",)
            else:
                inner = path
            if right is None:
                right = Gen(x)
            else:
                trace.append(RewriteStep("assoc1", "ltr", inner, 2, s + 1))
                right = Comp(right, s, Gen(x))
    return RootDecomposition(root, left, right), trace


def normalize_l_factor(t: Term) -> tuple[RootDecomposition, list[RewriteStep]]:
    """Root decomposition of an l-factor together with the rewrite trace.

    The left side carries the indices below the root index and the right side
    those above it; replaying the trace on ``t`` yields ``rebuild`` of the
    decomposition exactly.
    """
    if is_l_factor(t) is None:
        raise NotLFactorError(f"{format_term(t)} is not an l-factor")
    return normalize_chain(t)


# --- generation ----------------------------------------------------------

def random_term(rng, generators: int, indices: Sequence[int] | None = None) -> Term:
    """Uniformly split sizes and positions at random; ``rng`` is a ``random.Random``.

    ``indices`` defaults to ``1..generators`` in shuffled order.
    """
    if generators < 1:
        raise ValueError("a term needs at least one generator")
    if indices is None:
        indices = list(range(1, generators + 1))
        rng.shuffle(indices)
    if len(indices) != generators:
        raise ValueError("need exactly one index per generator")
    return _random_term(rng, list(indices))


def _random_term(rng, indices: list[int]) -> Term:
    if len(indices) == 1:
        return Gen(indices[0])
    k = rng.randint(1, len(indices) - 1)
    head = _random_term(rng, indices[:k])
    arg = _random_term(rng, indices[k:])
    return Comp(head, rng.randint(1, head.arity), arg)


def enumerate_terms(generators: int) -> list[Term]:
    """Every unindexed term with ``generators`` generators.

    Each is materialized with indices ``1..generators`` in left-to-right order
    of appearance, so distinct entries have distinct :func:`shape_key`.
    """
    return [_materialize(shape, iter(range(1, generators + 1)))
            for shape in _shapes(generators)]


def _shapes(k: int) -> list:
    if k == 1:
        return [None]
    out = []
    for a in range(1, k):
        for head in _shapes(a):
            for arg in _shapes(k - a):
                out.extend((head, pos, arg) for pos in range(1, a + 2))
    return out


def _materialize(shape, counter) -> Term:
    if shape is None:
        return Gen(next(counter))
    head = _materialize(shape[0], counter)
    return Comp(head, shape[1], _materialize(shape[2], counter))
