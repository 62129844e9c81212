"""
Permutations in one-line notation and their inversion sequences.

Permutations are tuples of the integers 1..n (1-based values, 1-based
positions in the public contract).  The inversion sequence of w is the
vector (x_1, ..., x_n) where x_i counts the inversions of w whose
inversion top is the value i; it always satisfies x_i in [0, i-1], and
w -> I(w) is a bijection from S_n onto the full box of such vectors.

>>> inversion_sequence((4, 1, 5, 6, 2, 3))
(0, 0, 0, 3, 2, 2)
>>> from_inversion_sequence((0, 0, 0, 3, 2, 2))
(4, 1, 5, 6, 2, 3)
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

DEFAULT_EXHAUSTIVE_LIMIT = 8

Perm = tuple[int, ...]
InvSeq = tuple[int, ...]


def validate_permutation(word: Sequence[int]) -> Perm:
    """Return word as a tuple, checking it is a permutation of {1..n}, n >= 1."""
    w = tuple(word)
    n = len(w)
    if n == 0:
        raise ValueError("permutations of size 0 are not supported")
    if sorted(w) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of {{1..{n}}}: {w!r}")
    return w


def validate_inversion_sequence(coords: Sequence[int]) -> InvSeq:
    """Return coords as a tuple, checking x_i in [0, i-1] for every i."""
    x = tuple(coords)
    if len(x) == 0:
        raise ValueError("inversion sequences of size 0 are not supported")
    for i, xi in enumerate(x, start=1):
        if not 0 <= xi <= i - 1:
            raise ValueError(f"coordinate {i} is {xi}, outside [0, {i - 1}]")
    return x


def identity(n: int) -> Perm:
    if n < 1:
        raise ValueError("size must be >= 1")
    return tuple(range(1, n + 1))


def long_element(n: int) -> Perm:
    """The reverse identity n, n-1, ..., 1, the maximum of the middle order."""
    if n < 1:
        raise ValueError("size must be >= 1")
    return tuple(range(n, 0, -1))


def inverse(w: Perm) -> Perm:
    inv = [0] * len(w)
    for pos, val in enumerate(w, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def inversion_sequence(w: Perm) -> InvSeq:
    """x_i = number of values j < i appearing after i in one-line notation."""
    w = validate_permutation(w)
    pos = inverse(w)
    return tuple(
        sum(1 for j in range(1, i) if pos[j - 1] > pos[i - 1])
        for i in range(1, len(w) + 1)
    )


def from_inversion_sequence(coords: Sequence[int]) -> Perm:
    """Inverse of inversion_sequence: decode a box vector to a permutation.

    Inserting the values 1..n in increasing order, value i goes x_i slots
    from the right of the current word, so exactly x_i smaller values end
    up after it.
    """
    x = validate_inversion_sequence(coords)
    word: list[int] = []
    for i, xi in enumerate(x, start=1):
        word.insert(len(word) - xi, i)
    return tuple(word)


def all_inversion_sequences(n: int) -> Iterator[InvSeq]:
    """All inversion sequences of size n in lexicographic order."""
    if n < 1:
        raise ValueError("size must be >= 1")
    return itertools.product(*(range(i) for i in range(1, n + 1)))


def all_permutations(n: int) -> list[Perm]:
    """All of S_n, ordered lexicographically by inversion sequence."""
    return [from_inversion_sequence(x) for x in all_inversion_sequences(n)]


def round_trip_all(n: int, limit: int = DEFAULT_EXHAUSTIVE_LIMIT) -> bool:
    """Exhaustively check that encode/decode is a bijection S_n <-> box."""
    if not 1 <= n <= limit:
        raise ValueError(f"n must be in [1, {limit}]")
    seen = set()
    for x in all_inversion_sequences(n):
        w = from_inversion_sequence(x)
        if inversion_sequence(w) != x:
            return False
        seen.add(w)
    return len(seen) == _factorial(n)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


# ---------------------------------------------------------------------------
# Pattern containment


@dataclass(frozen=True)
class MeshPattern:
    """A classical pattern together with a set of shaded grid cells.

    The cell (a, b), with a, b in [0, k], is the unit square
    [a, a+1] x [b, b+1] of the (k+1) x (k+1) grid around the pattern's
    permutation graph.
    """

    pattern: Perm
    mesh: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        p = validate_permutation(self.pattern)
        object.__setattr__(self, "pattern", p)
        object.__setattr__(self, "mesh", frozenset(self.mesh))
        k = len(p)
        for a, b in self.mesh:
            if not (0 <= a <= k and 0 <= b <= k):
                raise ValueError(f"mesh cell {(a, b)} outside [0,{k}]x[0,{k}]")


def _classical_occurrences(w: Perm, p: Perm) -> Iterator[tuple[int, ...]]:
    """Yield the position tuples (1-based, increasing) of occurrences of p in w."""
    n, k = len(w), len(p)
    if k > n:
        return
    for positions in itertools.combinations(range(1, n + 1), k):
        values = [w[q - 1] for q in positions]
        if _pattern_of(values) == p:
            yield positions


def _pattern_of(values: Sequence[int]) -> Perm:
    ranks = sorted(values)
    return tuple(ranks.index(v) + 1 for v in values)


def avoids_classical(w: Perm, p: Perm) -> bool:
    """True iff no subsequence of w is order-isomorphic to p."""
    w = validate_permutation(w)
    p = validate_permutation(p)
    return next(_classical_occurrences(w, p), None) is None


def count_classical(w: Perm, p: Perm) -> int:
    return sum(1 for _ in _classical_occurrences(validate_permutation(w),
                                                 validate_permutation(p)))


def mesh_contains(w: Perm, m: MeshPattern) -> int:
    """Count occurrences of the mesh pattern m in w.

    An occurrence at positions p_1 < ... < p_k with chosen values sorted
    as q_1 < ... < q_k stretches cell (a, b) to the open region of points
    of w strictly between the a-th and (a+1)-th chosen positions and
    strictly between the b-th and (b+1)-th chosen values (a = 0 / b = 0
    meaning before the first, a = k / b = k after the last).  The
    occurrence counts only if every stretched shaded region is point-free.
    """
    w = validate_permutation(w)
    n, k = len(w), len(m.pattern)
    count = 0
    for positions in _classical_occurrences(w, m.pattern):
        qvals = sorted(w[q - 1] for q in positions)
        pos_bounds = (0,) + positions + (n + 1,)
        val_bounds = (0,) + tuple(qvals) + (n + 1,)
        ok = True
        for a, b in m.mesh:
            lo_p, hi_p = pos_bounds[a], pos_bounds[a + 1]
            lo_v, hi_v = val_bounds[b], val_bounds[b + 1]
            if any(lo_v < w[q - 1] < hi_v for q in range(lo_p + 1, hi_p)):
                ok = False
                break
        if ok:
            count += 1
    return count


# ---------------------------------------------------------------------------
# Cycles, involutions, Foata


def cycles(w: Perm) -> list[tuple[int, ...]]:
    """Disjoint cycles of w, each starting at its minimum, sorted by minima."""
    w = validate_permutation(w)
    seen = [False] * len(w)
    out = []
    for start in range(1, len(w) + 1):
        if seen[start - 1]:
            continue
        cyc = []
        v = start
        while not seen[v - 1]:
            seen[v - 1] = True
            cyc.append(v)
            v = w[v - 1]
        out.append(tuple(cyc))
    return out


def cycle_count(w: Perm) -> int:
    """Number of cycles of w, fixed points included."""
    return len(cycles(w))


def is_involution(w: Perm) -> bool:
    w = validate_permutation(w)
    return all(w[w[i - 1] - 1] == i for i in range(1, len(w) + 1))


def foata_image(w: Perm) -> Perm:
    """Modified Foata bijection.

    Write w in cycle notation with the smallest element of each cycle
    listed last and cycles sorted by increasing minima; dropping the
    parentheses gives the one-line notation of the image.  The image has
    as many right-to-left minima as w has cycles.

    >>> foata_image((3, 2, 1))
    (3, 1, 2)
    """
    word: list[int] = []
    for cyc in cycles(w):
        word.extend(cyc[1:])
        word.append(cyc[0])
    return tuple(word)


def right_to_left_minima(w: Perm) -> frozenset[int]:
    """Values i such that no smaller value appears at a later position."""
    w = validate_permutation(w)
    out = set()
    smallest = len(w) + 1
    for v in reversed(w):
        if v < smallest:
            out.add(v)
            smallest = v
    return frozenset(out)


# ---------------------------------------------------------------------------
# Serialization


def format_permutation(w: Perm) -> str:
    """Digit string for n <= 9, comma-separated otherwise."""
    w = validate_permutation(w)
    if len(w) <= 9:
        return "".join(str(v) for v in w)
    return ",".join(str(v) for v in w)


def parse_permutation(text: str) -> Perm:
    text = text.strip()
    if not text:
        raise ValueError("empty permutation string")
    if "," in text:
        try:
            word = [int(part) for part in text.split(",")]
        except ValueError as exc:
            raise ValueError(f"bad permutation {text!r}") from exc
    else:
        if not text.isdigit():
            raise ValueError(f"bad permutation {text!r}")
        word = [int(ch) for ch in text]
    return validate_permutation(word)


def format_inversion_sequence(x: InvSeq) -> str:
    return ",".join(str(v) for v in x)


def parse_inversion_sequence(text: str) -> InvSeq:
    try:
        coords = [int(part) for part in text.strip().split(",")]
    except ValueError as exc:
        raise ValueError(f"bad inversion sequence {text!r}") from exc
    return validate_inversion_sequence(coords)
