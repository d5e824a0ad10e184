"""
Encodings of words as indexed operadic terms.

``head_insertion`` reads a word left to right, grafting each new generator at
the rank of its letter among the letters seen so far, so the result is always
an l-factor rooted at the first letter. ``decreasing_encoding`` inserts the
letters from largest to smallest, placing letter ``x`` at one plus the number
of larger letters standing to its left.

>>> from operadlab.terms import format_term
>>> format_term(head_insertion((3, 1, 2)))
'((2^3 o_1 2^1) o_2 2^2)'
>>> format_term(decreasing_encoding((3, 1, 2)))
'((2^3 o_2 2^2) o_2 2^1)'
"""

from __future__ import annotations

from collections.abc import Iterable

from .combinatorics import Word, as_word, insertion_index, reverse, split_below_above
from .errors import EmptyWordError, MissingLetterError
from .terms import Comp, Gen, RootDecomposition, Term, evaluate, normalize_chain
from .trees import BinaryTree

__all__ = [
    "head_insertion", "u_count", "decreasing_encoding", "g_map",
    "h_root_decomposition", "f_normalization", "f_normalization_trace",
]


def _nonempty(word: Iterable[int] | str) -> Word:
    word = as_word(word)
    if not word:
        raise EmptyWordError("the encodings are defined on nonempty words only")
    return word


def head_insertion(word: Iterable[int] | str) -> Term:
    word = _nonempty(word)
    term: Term = Gen(word[0])
    for t in range(1, len(word)):
        term = Comp(term, insertion_index(word[t], word[:t]), Gen(word[t]))
    return term


def u_count(word: Iterable[int] | str, x: int) -> int:
    """Number of letters of ``word`` larger than ``x`` standing to its left."""
    word = as_word(word)
    if x not in word:
        raise MissingLetterError(f"letter {x} does not occur in {word}")
    return sum(1 for y in word[:word.index(x)] if y > x)


def decreasing_encoding(word: Iterable[int] | str) -> Term:
    word = _nonempty(word)
    kappa = sorted(word, reverse=True)
    term: Term = Gen(kappa[0])
    for x in kappa[1:]:
        term = Comp(term, u_count(word, x) + 1, Gen(x))
    return term


def g_map(word: Iterable[int] | str) -> BinaryTree:
    """Evaluate the head-insertion encoding of the reversed word."""
    return evaluate(head_insertion(reverse(_nonempty(word))))


def h_root_decomposition(word: Iterable[int] | str) -> RootDecomposition:
    """Split the head-insertion encoding at its root letter, word-side.

    The sides are the encodings of the subwords below and above the first
    letter, read in their original order.
    """
    word = _nonempty(word)
    below, above = split_below_above(word, word[0])
    return RootDecomposition(
        word[0],
        head_insertion(below) if below else None,
        head_insertion(above) if above else None,
    )


def f_normalization_trace(word: Iterable[int] | str):
    """Rewrite ``decreasing_encoding(word)`` into root form; returns ``(decomposition, trace)``."""
    return normalize_chain(decreasing_encoding(_nonempty(word)))


def f_normalization(word: Iterable[int] | str) -> RootDecomposition:
    """Root decomposition of the decreasing encoding at the largest letter.

    Computed by rewriting, so the sides come out of the axioms rather than
    from splitting the word; they are congruent to the encodings of the
    subwords left and right of the maximum.
    """
    return f_normalization_trace(word)[0]
