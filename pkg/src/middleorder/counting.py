"""
Counting machinery for the middle order: intervals in total and by
rank, boolean intervals, signless Stirling numbers of the first kind,
and the Euler-characteristic valuation.

All counts are exact; the harmonic-number identity for the number of
covering relations is evaluated in rational arithmetic.
"""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache

from .permutations import (
    Perm,
    all_permutations,
    inversion_sequence,
    validate_permutation,
)

COUNTING_LIMIT = 50


def _check_n(n: int, smallest: int = 1) -> None:
    if not smallest <= n <= COUNTING_LIMIT:
        raise ValueError(f"n must be in [{smallest}, {COUNTING_LIMIT}]")


def interval_count_total(n: int) -> int:
    """Number of intervals in the middle order of size n: n!(n+1)!/2^n."""
    _check_n(n)
    value = math.factorial(n) * math.factorial(n + 1) // 2**n
    check = 1
    for i in range(n):
        check *= math.comb(i + 2, 2)
    assert value == check
    return value


@lru_cache(maxsize=None)
def intervals_by_rank(n: int) -> tuple[int, ...]:
    """Row (f(n,0), ..., f(n, C(n,2))) of interval counts by rank.

    f(1,0) = 1 and f(n,k) = sum_{h=0}^{n-1} (n-h) f(n-1, k-h).
    """
    _check_n(n)
    if n == 1:
        return (1,)
    prev = intervals_by_rank(n - 1)
    width = math.comb(n, 2) + 1
    row = []
    for k in range(width):
        total = 0
        for h in range(n):
            if 0 <= k - h < len(prev):
                total += (n - h) * prev[k - h]
        row.append(total)
    return tuple(row)


def covering_relation_count(n: int) -> int:
    """f(n,1), cross-checked against the exact identity n!(n - H_n)."""
    _check_n(n, smallest=2)
    from_table = intervals_by_rank(n)[1]
    harmonic = sum(Fraction(1, i) for i in range(1, n + 1))
    closed = Fraction(math.factorial(n)) * (n - harmonic)
    assert closed.denominator == 1 and closed.numerator == from_table
    return from_table


@lru_cache(maxsize=None)
def polynomial_row(n: int) -> tuple[int, ...]:
    """Coefficients (p(n,0), ..., p(n, C(n,2))) of the row polynomial
    prod_{i=1..n} (1 + 2x + ... + i x^{i-1}).

    Reversing the row gives intervals_by_rank(n).
    """
    _check_n(n)
    if n == 1:
        return (1,)
    prev = polynomial_row(n - 1)
    width = math.comb(n, 2) + 1
    row = []
    for k in range(width):
        # The new factor has degree n-1, so the convolution index is
        # capped at n-1 (not at k as in a naive reading).
        total = 0
        for h in range(min(k, n - 1) + 1):
            if k - h < len(prev):
                total += (h + 1) * prev[k - h]
        row.append(total)
    return tuple(row)


def is_boolean_interval(v: Perm, w: Perm) -> tuple[bool, int]:
    """Whether [v, w] is boolean, and its rank when it is.

    Boolean means every coordinate of I(w) - I(v) is 0 or 1; the rank is
    the number of ones and never exceeds n - 1.
    """
    v = validate_permutation(v)
    w = validate_permutation(w)
    if len(v) != len(w):
        raise ValueError("size mismatch")
    diffs = [b - a for a, b in zip(inversion_sequence(v), inversion_sequence(w))]
    if any(d < 0 for d in diffs):
        raise ValueError(f"{v} is not below {w} in the middle order")
    if any(d > 1 for d in diffs):
        return False, 0
    return True, sum(diffs)


def boolean_interval_total(n: int) -> int:
    """(2n-1)!! as a product of odd numbers."""
    _check_n(n)
    value = 1
    for odd in range(1, 2 * n, 2):
        value *= odd
    return value


@lru_cache(maxsize=None)
def stirling_first_unsigned(n: int, j: int) -> int:
    """c(n, j): permutations of size n with j cycles."""
    if n < 0 or j < 0:
        raise ValueError("need n >= 0 and j >= 0")
    if j > n:
        return 0
    if n == 0:
        return 1 if j == 0 else 0
    if j == 0:
        return 0
    return stirling_first_unsigned(n - 1, j - 1) + (n - 1) * stirling_first_unsigned(n - 1, j)


def boolean_by_rank(n: int) -> tuple[int, ...]:
    """Row (b(n,0), ..., b(n,n-1)) of boolean-interval counts by rank.

    Computed by the closed formula b(n,k) = sum_i C(i,k) c(n,n-i) and
    re-derived by the recursion b(n,k) = n b(n-1,k) + (n-1) b(n-1,k-1);
    the two must agree.
    """
    _check_n(n)
    closed = tuple(
        sum(math.comb(i, k) * stirling_first_unsigned(n, n - i) for i in range(n + 1))
        for k in range(n)
    )
    assert closed == _boolean_by_rank_recursive(n)
    return closed


@lru_cache(maxsize=None)
def _boolean_by_rank_recursive(n: int) -> tuple[int, ...]:
    if n == 1:
        return (1,)
    prev = _boolean_by_rank_recursive(n - 1)

    def at(k: int) -> int:
        return prev[k] if 0 <= k < len(prev) else 0

    return tuple(n * at(k) + (n - 1) * at(k - 1) for k in range(n))


def euler_characteristic(w: Perm) -> int:
    """Number of right-to-left non-minima of w, i.e. of nonzero
    inversion-sequence coordinates."""
    return sum(1 for x in inversion_sequence(w) if x != 0)


def euler_distribution(n: int) -> tuple[int, ...]:
    """Histogram of the Euler characteristic over S_n; entry k equals
    c(n, n-k)."""
    if n > 10:
        raise ValueError("exhaustive distribution capped at n = 10")
    counts = [0] * n
    for w in all_permutations(n):
        counts[euler_characteristic(w)] += 1
    return tuple(counts)


# ---------------------------------------------------------------------------
# Table export

TABLE_KINDS = ("intervals", "boolean", "euler", "stirling")


def table_rows(kind: str, n: int) -> list[tuple[int, tuple[int, ...]]]:
    """Rows 1..n of the requested table as (n, values) pairs."""
    if kind == "intervals":
        return [(m, intervals_by_rank(m)) for m in range(1, n + 1)]
    if kind == "boolean":
        return [(m, boolean_by_rank(m)) for m in range(1, n + 1)]
    if kind == "euler":
        return [
            (m, tuple(stirling_first_unsigned(m, m - k) for k in range(m)))
            for m in range(1, n + 1)
        ]
    if kind == "stirling":
        return [
            (m, tuple(stirling_first_unsigned(m, j) for j in range(m + 1)))
            for m in range(1, n + 1)
        ]
    raise ValueError(f"unknown table kind {kind!r}")


def rows_to_csv(rows: list[tuple[int, tuple[int, ...]]]) -> str:
    lines = ["n,k,value"]
    for n, values in rows:
        for k, value in enumerate(values):
            lines.append(f"{n},{k},{value}")
    return "\n".join(lines) + "\n"


def rows_to_bfile(rows: list[tuple[int, tuple[int, ...]]]) -> str:
    """OEIS b-file lines, flattened row by row, left to right."""
    lines = []
    index = 1
    for _, values in rows:
        for value in values:
            lines.append(f"{index} {value}")
            index += 1
    return "\n".join(lines) + "\n"


def rows_to_json(kind: str, rows: list[tuple[int, tuple[int, ...]]]) -> str:
    payload = {
        "kind": kind,
        "rows": [{"n": n, "values": list(values)} for n, values in rows],
    }
    return json.dumps(payload, indent=2) + "\n"
