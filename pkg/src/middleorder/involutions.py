"""
The subposet of involutions inside the middle order.

Involutions are characterized recursively through their inversion
sequences; the slow-climbing ones (no ascent jumping by more than one)
are exactly the concatenations of blocks (0, 1, ..., h), and the
Moebius function of a principal order ideal is (-1)^(nonzero entries)
for slow-climbing involutions and 0 otherwise.
"""
from __future__ import annotations

from functools import lru_cache

from .orders import middle_leq
from .permutations import (
    InvSeq,
    Perm,
    all_permutations,
    inversion_sequence,
    is_involution,
    validate_inversion_sequence,
    validate_permutation,
)
from .posets import FinitePoset


def involution_seq_check(coords: InvSeq) -> bool:
    """Decide whether coords is the inversion sequence of an involution.

    Recursion: either x_n = 0 and the prefix is involutive, or
    x_n = k > 0, x_{n-k} = 0, and the size-(n-2) sequence obtained by
    dropping positions n-k and n and lowering the entries in between by
    one is involutive.
    """
    x = validate_inversion_sequence(coords)
    return _seq_check(x)


def _seq_check(x: tuple[int, ...]) -> bool:
    n = len(x)
    if n == 0:
        return True
    k = x[n - 1]
    if k == 0:
        return _seq_check(x[:-1])
    if x[n - k - 1] != 0:
        return False
    reduced = x[: n - k - 1] + tuple(v - 1 for v in x[n - k : n - 1])
    if any(v < 0 for v in reduced):
        return False
    return _seq_check(reduced)


@lru_cache(maxsize=None)
def involution_count(n: int) -> int:
    """i(n) = i(n-1) + (n-1) i(n-2), with i(0) = i(1) = 1."""
    if n < 0:
        raise ValueError("size must be >= 0")
    if n <= 1:
        return 1
    return involution_count(n - 1) + (n - 1) * involution_count(n - 2)


@lru_cache(maxsize=None)
def all_involutions(n: int) -> tuple[Perm, ...]:
    """Involutions of size n, ordered lexicographically by inversion sequence."""
    return tuple(w for w in all_permutations(n) if is_involution(w))


def is_slow_climbing(coords: InvSeq) -> bool:
    """True iff every ascent rises by exactly one."""
    x = validate_inversion_sequence(coords)
    return all(not (a < b) or b == a + 1 for a, b in zip(x, x[1:]))


def slow_climb_decompose(coords: InvSeq) -> list[tuple[int, ...]]:
    """Split a slow-climbing involutive sequence into its (0,1,...,h) blocks.

    Blocks are cut exactly before each zero.
    """
    x = validate_inversion_sequence(coords)
    if not involution_seq_check(x):
        raise ValueError(f"{x} is not the inversion sequence of an involution")
    if not is_slow_climbing(x):
        raise ValueError(f"{x} is not slow-climbing")
    blocks: list[tuple[int, ...]] = []
    current: list[int] = []
    for v in x:
        if v == 0 and current:
            blocks.append(tuple(current))
            current = []
        current.append(v)
    blocks.append(tuple(current))
    for block in blocks:
        assert block == tuple(range(len(block)))
    return blocks


def clusters(coords: InvSeq) -> list[tuple[int, int]]:
    """Maximal index intervals [a, b] (1-based) with y_{a+j} >= j.

    Maximality means neither [a-1, b] nor [a, b+1] has the property.
    The clusters are pairwise incomparable and cover [1, n].
    """
    y = validate_inversion_sequence(coords)
    n = len(y)

    def holds(a: int, b: int) -> bool:
        if a < 1 or b > n:
            return False
        return all(y[a + j - 1] >= j for j in range(b - a + 1))

    found = set()
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if holds(a, b) and not holds(a - 1, b) and not holds(a, b + 1):
                found.add((a, b))
    return sorted(found)


def maximal_slow_climbing_below(w: Perm) -> list[Perm]:
    """The antichain of maximal slow-climbing involutions below w.

    Computed by exhaustive filtering of the involutions of size n.
    """
    w = validate_permutation(w)
    if not is_involution(w):
        raise ValueError(f"{w} is not an involution")
    candidates = [
        v
        for v in all_involutions(len(w))
        if is_slow_climbing(inversion_sequence(v)) and middle_leq(v, w)
    ]
    return [
        v
        for v in candidates
        if not any(u != v and middle_leq(v, u) for u in candidates)
    ]


def mobius_involution_ideal(w: Perm) -> int:
    """Moebius value of the principal order ideal [identity, w] inside the
    induced involution subposet."""
    w = validate_permutation(w)
    if not is_involution(w):
        raise ValueError(f"{w} is not an involution")
    x = inversion_sequence(w)
    if not is_slow_climbing(x):
        return 0
    nonzero = sum(1 for v in x if v != 0)
    return -1 if nonzero % 2 else 1


def involution_poset(n: int) -> FinitePoset:
    """The involutions of size n under the induced middle order."""
    return FinitePoset.from_leq(all_involutions(n), middle_leq)
