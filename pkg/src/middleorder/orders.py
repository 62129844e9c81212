"""
The three orders on S_n: middle, weak and Bruhat.

The middle order compares inversion sequences coordinate-wise, which
makes it a distributive lattice (a product of chains).  Weak and Bruhat
comparability are computed as reflexive-transitive closures of their
cover relations, cached per size.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional

from .permutations import (
    Perm,
    all_permutations,
    from_inversion_sequence,
    inversion_sequence,
    validate_permutation,
)
from .posets import FinitePoset


def _check_sizes(v: Perm, w: Perm) -> tuple[Perm, Perm]:
    v = validate_permutation(v)
    w = validate_permutation(w)
    if len(v) != len(w):
        raise ValueError(f"size mismatch: {len(v)} vs {len(w)}")
    return v, w


# ---------------------------------------------------------------------------
# Middle order


def middle_leq(v: Perm, w: Perm) -> bool:
    v, w = _check_sizes(v, w)
    return all(a <= b for a, b in zip(inversion_sequence(v), inversion_sequence(w)))


def middle_covers(v: Perm, w: Perm) -> bool:
    """True iff the inversion sequences differ by +1 in exactly one coordinate."""
    v, w = _check_sizes(v, w)
    diffs = [b - a for a, b in zip(inversion_sequence(v), inversion_sequence(w))]
    return diffs.count(0) == len(v) - 1 and diffs.count(1) == 1


def meet(v: Perm, w: Perm) -> Perm:
    v, w = _check_sizes(v, w)
    return from_inversion_sequence(
        tuple(min(a, b) for a, b in zip(inversion_sequence(v), inversion_sequence(w)))
    )


def join(v: Perm, w: Perm) -> Perm:
    v, w = _check_sizes(v, w)
    return from_inversion_sequence(
        tuple(max(a, b) for a, b in zip(inversion_sequence(v), inversion_sequence(w)))
    )


def rank(w: Perm) -> int:
    """Number of inversions of w; the middle-order rank function."""
    return sum(inversion_sequence(w))


def upper_covers(w: Perm) -> list[Perm]:
    """Elements covering w in the middle order, in coordinate order."""
    x = list(inversion_sequence(w))
    out = []
    for i in range(len(x)):
        if x[i] < i:
            x[i] += 1
            out.append(from_inversion_sequence(tuple(x)))
            x[i] -= 1
    return out


def join_irreducibles(n: int) -> list[Perm]:
    """Permutations whose inversion sequence has exactly one nonzero entry.

    These are the words 1 2 ... i j (i+1) ... (j-1) (j+1) ... n; there
    are n(n-1)/2 of them.
    """
    if n < 1:
        raise ValueError("size must be >= 1")
    out = []
    for j in range(2, n + 1):
        for k in range(1, j):
            coords = [0] * n
            coords[j - 1] = k
            out.append(from_inversion_sequence(tuple(coords)))
    return out


def mobius_middle(v: Perm, w: Perm) -> int:
    """Closed-form Moebius function of the middle order.

    Zero unless [v, w] is a boolean interval (all coordinate differences
    0 or 1), in which case it is (-1)^(rank difference).
    """
    v, w = _check_sizes(v, w)
    diffs = [b - a for a, b in zip(inversion_sequence(v), inversion_sequence(w))]
    if any(d < 0 for d in diffs):
        return 0
    if any(d > 1 for d in diffs):
        return 0
    return -1 if sum(diffs) % 2 else 1


def cover_mesh_witness(v: Perm, w: Perm) -> Optional[tuple[int, int]]:
    """The value pair (j, i) swapped between v and w when v is covered by w.

    The pair is an occurrence in v of the rise pattern with the cell
    below-and-between shaded: j before i, j < i, and no value smaller
    than i strictly between their positions.  Found by direct search
    over value pairs, independently of inversion sequences; returns None
    when no such swap produces w.
    """
    v, w = _check_sizes(v, w)
    n = len(v)
    witnesses = []
    for a in range(n):
        for b in range(a + 1, n):
            j, i = v[a], v[b]
            if j >= i:
                continue
            if any(v[c] < i for c in range(a + 1, b)):
                continue
            swapped = list(v)
            swapped[a], swapped[b] = i, j
            if tuple(swapped) == w:
                witnesses.append((j, i))
    if not witnesses:
        return None
    if len(witnesses) > 1:
        raise AssertionError(f"non-unique mesh witness for {v} -> {w}: {witnesses}")
    return witnesses[0]


# ---------------------------------------------------------------------------
# Weak and Bruhat orders


def weak_covers(v: Perm, w: Perm) -> bool:
    """True iff w is v with two adjacent positions holding an ascent swapped."""
    v, w = _check_sizes(v, w)
    diff = [p for p in range(len(v)) if v[p] != w[p]]
    if len(diff) != 2:
        return False
    a, b = diff
    return b == a + 1 and v[a] < v[b] and w[a] == v[b] and w[b] == v[a]


def bruhat_covers(v: Perm, w: Perm) -> bool:
    """True iff w is v with one noninversion turned into an inversion and
    the inversion count goes up by exactly one."""
    v, w = _check_sizes(v, w)
    diff = [p for p in range(len(v)) if v[p] != w[p]]
    if len(diff) != 2:
        return False
    a, b = diff
    if not (v[a] == w[b] and v[b] == w[a] and v[a] < v[b]):
        return False
    return rank(w) == rank(v) + 1


@lru_cache(maxsize=None)
def _closure(n: int, kind: str) -> tuple[dict[Perm, int], list[int]]:
    """Reachability masks over the cover relation of the given order."""
    perms = all_permutations(n)
    index = {p: i for i, p in enumerate(perms)}
    covers_of = {
        "middle": upper_covers,
        "weak": _weak_upper_covers,
        "bruhat": _bruhat_upper_covers,
    }[kind]
    succ: list[list[int]] = [[] for _ in perms]
    for p in perms:
        succ[index[p]] = [index[q] for q in covers_of(p)]
    above = [0] * len(perms)
    # Covers raise the inversion count by one, so processing by
    # decreasing rank is a reverse topological order.
    for i in sorted(range(len(perms)), key=lambda i: -rank(perms[i])):
        mask = 1 << i
        for j in succ[i]:
            mask |= above[j]
        above[i] = mask
    return index, above


def _weak_upper_covers(v: Perm) -> list[Perm]:
    out = []
    for p in range(len(v) - 1):
        if v[p] < v[p + 1]:
            word = list(v)
            word[p], word[p + 1] = word[p + 1], word[p]
            out.append(tuple(word))
    return out


def _bruhat_upper_covers(v: Perm) -> list[Perm]:
    out = []
    n = len(v)
    for a in range(n):
        for b in range(a + 1, n):
            if v[a] >= v[b]:
                continue
            # The swap adds exactly one inversion iff no intermediate
            # value sits between the two positions.
            if any(v[a] < v[c] < v[b] for c in range(a + 1, b)):
                continue
            word = list(v)
            word[a], word[b] = word[b], word[a]
            out.append(tuple(word))
    return out


def weak_leq(v: Perm, w: Perm) -> bool:
    v, w = _check_sizes(v, w)
    index, above = _closure(len(v), "weak")
    return bool(above[index[v]] >> index[w] & 1)


def bruhat_leq(v: Perm, w: Perm) -> bool:
    v, w = _check_sizes(v, w)
    index, above = _closure(len(v), "bruhat")
    return bool(above[index[v]] >> index[w] & 1)


# ---------------------------------------------------------------------------
# Posets for the oracle and for diagrams


def middle_poset(n: int) -> FinitePoset:
    perms = all_permutations(n)
    index = {p: i for i, p in enumerate(perms)}
    pairs = []
    for p in perms:
        for q in upper_covers(p):
            pairs.append((index[p], index[q]))
    return FinitePoset.from_covers(perms, pairs)


def weak_poset(n: int) -> FinitePoset:
    return _cover_poset(n, _weak_upper_covers)


def bruhat_poset(n: int) -> FinitePoset:
    return _cover_poset(n, _bruhat_upper_covers)


def _cover_poset(n, covers_of) -> FinitePoset:
    perms = all_permutations(n)
    index = {p: i for i, p in enumerate(perms)}
    pairs = []
    for p in perms:
        for q in covers_of(p):
            pairs.append((index[p], index[q]))
    return FinitePoset.from_covers(perms, pairs)
