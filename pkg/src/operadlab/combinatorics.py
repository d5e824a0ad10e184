"""
Words of distinct positive integers, permutations in one-line notation and the
two weak Bruhat orders on S_n.

Words and permutations are plain tuples of ints. ``as_word`` and
``as_permutation`` validate arbitrary sequences; every public operation calls
one of them on its input, so lists and strings in the text format are accepted
wherever a word is expected.

>>> standardize((5, 2, 4))
(3, 1, 2)
>>> sorted(weak_covers_right((1, 2, 3)))
[(1, 3, 2), (2, 1, 3)]
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Iterator, Sequence
from functools import lru_cache

from .errors import (
    DuplicateLetterError,
    NotAPermutationError,
    ParseError,
    PositionError,
    SizeMismatchError,
    WordError,
)

__all__ = [
    "Word", "Permutation",
    "as_word", "as_permutation", "parse_word", "format_word",
    "standardize", "reverse", "split_below_above", "insertion_index",
    "inversions", "inverse", "swap_adjacent",
    "weak_covers_right", "weak_covers_left", "weak_upset", "weak_leq",
    "permutations", "right_cover_pairs",
]

# a finite sequence of pairwise distinct positive integers
Word = tuple[int, ...]

# a word whose letter set is exactly {1, ..., len}
Permutation = tuple[int, ...]


def as_word(letters: Iterable[int] | str) -> Word:
    """Validate ``letters`` and return it as a tuple.

    Strings are parsed with :func:`parse_word`.
    """
    if isinstance(letters, str):
        return parse_word(letters)
    word = tuple(letters)
    for x in word:
        if isinstance(x, bool) or not isinstance(x, int):
            raise WordError(f"letter {x!r} is not an integer")
        if x < 1:
            raise WordError(f"letter {x} is not positive")
    if len(set(word)) != len(word):
        raise DuplicateLetterError(f"word {word} has a repeated letter")
    return word


def as_permutation(entries: Iterable[int] | str) -> Permutation:
    perm = as_word(entries)
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise NotAPermutationError(f"{perm} is not a permutation of [{len(perm)}]")
    return perm


def parse_word(text: str) -> Word:
    """Parse ``"2413"`` or ``"2,4,1,3,10"``; ``""`` and ``"∅"`` give the empty word.

    A single trailing comma is allowed, so ``"10,"`` is the one-letter word 10.
    """
    text = text.strip()
    if text in ("", "∅"):
        return ()
    try:
        if "," in text:
            parts = text.split(",")
            if parts[-1] == "" and len(parts) > 1:
                parts.pop()
            letters = [int(part) for part in parts]
        elif text.isdigit():
            letters = [int(ch) for ch in text]
        else:
            raise ValueError(text)
    except ValueError:
        raise ParseError(f"cannot parse word {text!r}") from None
    return as_word(letters)


def format_word(word: Sequence[int]) -> str:
    """Digit string when every letter is a single digit, else comma separated.

    A one-letter word with a multi-digit letter gets a trailing comma so that
    it does not read back as several digits.
    """
    if all(x <= 9 for x in word):
        return "".join(map(str, word))
    if len(word) == 1:
        return f"{word[0]},"
    return ",".join(map(str, word))


def standardize(word: Iterable[int] | str) -> Permutation:
    """Relabel letters by rank, keeping their relative order."""
    word = as_word(word)
    rank = {x: r for r, x in enumerate(sorted(word), start=1)}
    return tuple(rank[x] for x in word)


def reverse(word: Iterable[int] | str) -> Word:
    return as_word(word)[::-1]


def split_below_above(word: Iterable[int] | str, x: int) -> tuple[Word, Word]:
    """Return the subwords of letters ``< x`` and ``> x``, in their original order."""
    word = as_word(word)
    return (tuple(y for y in word if y < x), tuple(y for y in word if y > x))


def insertion_index(x: int, sigma: Iterable[int] | str) -> int:
    """``1 + #{y in sigma : y < x}``; ``x`` must be fresh for ``sigma``."""
    sigma = as_word(sigma)
    if x in sigma:
        raise DuplicateLetterError(f"letter {x} already occurs in {sigma}")
    return 1 + sum(1 for y in sigma if y < x)


def inversions(perm: Iterable[int] | str) -> int:
    perm = as_permutation(perm)
    return sum(1 for i, j in itertools.combinations(range(len(perm)), 2) if perm[i] > perm[j])


def inverse(perm: Iterable[int] | str) -> Permutation:
    perm = as_permutation(perm)
    inv = [0] * len(perm)
    for position, value in enumerate(perm, start=1):
        inv[value - 1] = position
    return tuple(inv)


def swap_adjacent(perm: Sequence[int], i: int) -> tuple[int, ...]:
    """Swap the entries in (1-based) positions ``i`` and ``i + 1``."""
    if not 1 <= i < len(perm):
        raise PositionError(f"position {i} outside 1..{len(perm) - 1}")
    p = list(perm)
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def weak_covers_right(perm: Iterable[int] | str) -> set[Permutation]:
    """Swap adjacent positions ``i, i+1`` wherever ``perm[i] < perm[i+1]``."""
    perm = as_permutation(perm)
    return {swap_adjacent(perm, i) for i in range(1, len(perm)) if perm[i - 1] < perm[i]}


def weak_covers_left(perm: Iterable[int] | str) -> set[Permutation]:
    """Swap the values ``i, i+1`` wherever ``i`` stands left of ``i+1``."""
    perm = as_permutation(perm)
    where = {v: k for k, v in enumerate(perm)}
    covers = set()
    for i in range(1, len(perm)):
        if where[i] < where[i + 1]:
            q = list(perm)
            q[where[i]], q[where[i + 1]] = i + 1, i
            covers.add(tuple(q))
    return covers


@lru_cache(maxsize=None)
def _weak_upset(perm: Permutation) -> frozenset[Permutation]:
    seen = {perm}
    frontier = [perm]
    while frontier:
        nxt = []
        for p in frontier:
            for q in weak_covers_right(p):
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return frozenset(seen)


def weak_upset(perm: Iterable[int] | str) -> frozenset[Permutation]:
    """All permutations reachable from ``perm`` by right-weak covers (memoized)."""
    return _weak_upset(as_permutation(perm))


def weak_leq(perm: Iterable[int] | str, other: Iterable[int] | str) -> bool:
    perm, other = as_permutation(perm), as_permutation(other)
    if len(perm) != len(other):
        raise SizeMismatchError(f"{perm} and {other} have different lengths")
    if inversions(other) < inversions(perm):
        return False
    return other in _weak_upset(perm)


def permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic order (S_0 holds the empty permutation)."""
    return itertools.permutations(range(1, n + 1))


def right_cover_pairs(n: int) -> Iterator[tuple[Permutation, Permutation, int]]:
    """Yield ``(pi, rho, i)`` for every right-weak cover ``rho = pi s_i`` of S_n.

    Ordered lexicographically by ``pi`` and then by ``i``.
    """
    for pi in permutations(n):
        for i in range(1, n):
            if pi[i - 1] < pi[i]:
                yield pi, swap_adjacent(pi, i), i

