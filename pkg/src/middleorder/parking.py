"""
The lattice of parking functions under coordinate-wise order, with an
adjoined top.

A preference vector (p_1, ..., p_n), p_i in [1, n], is a parking
function when its nondecreasing rearrangement satisfies q_i <= i.
Coordinate-wise meets of parking functions are parking functions;
joins fall back to the adjoined top when the coordinate-wise max fails
the criterion.  The resulting lattice is neither modular nor
distributive for n >= 3 (it contains a pentagon).
"""
from __future__ import annotations

import itertools
from typing import Sequence, Union

from .posets import FinitePoset


class _Top:
    """Sentinel strictly above every parking function."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "T"


TOP = _Top()

ParkingFunction = Union[tuple[int, ...], _Top]


def validate_parking_function(prefs: Sequence[int]) -> tuple[int, ...]:
    p = tuple(prefs)
    n = len(p)
    if n == 0:
        raise ValueError("parking functions of size 0 are not supported")
    if any(not 1 <= v <= n for v in p):
        raise ValueError(f"preferences must lie in [1, {n}]: {p!r}")
    if not is_parking_function(p):
        raise ValueError(f"{p!r} is not a parking function")
    return p


def is_parking_function(prefs: Sequence[int]) -> bool:
    """Sorted criterion: the nondecreasing rearrangement has q_i <= i."""
    p = tuple(prefs)
    n = len(p)
    if n == 0:
        raise ValueError("parking functions of size 0 are not supported")
    if any(not 1 <= v <= n for v in p):
        raise ValueError(f"preferences must lie in [1, {n}]: {p!r}")
    return all(q <= i for i, q in enumerate(sorted(p), start=1))


def parking_simulation(prefs: Sequence[int]) -> bool:
    """Car-parking oracle: car i parks at the first free spot >= p_i;
    the preferences form a parking function iff every car parks."""
    p = tuple(prefs)
    n = len(p)
    occupied = [False] * (n + 1)
    for pref in p:
        spot = pref
        while spot <= n and occupied[spot]:
            spot += 1
        if spot > n:
            return False
        occupied[spot] = True
    return True


def pf_leq(p: ParkingFunction, q: ParkingFunction) -> bool:
    if q is TOP:
        return True
    if p is TOP:
        return False
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return all(a <= b for a, b in zip(p, q))


def pf_meet(p: ParkingFunction, q: ParkingFunction) -> ParkingFunction:
    if p is TOP:
        return q
    if q is TOP:
        return p
    if len(p) != len(q):
        raise ValueError("size mismatch")
    return tuple(min(a, b) for a, b in zip(p, q))


def pf_join(p: ParkingFunction, q: ParkingFunction) -> ParkingFunction:
    """Coordinate-wise max when that is a parking function, TOP otherwise.

    Any upper bound dominates the coordinate-wise max, and domination
    preserves failure of the sorted criterion, so TOP is then least.
    """
    if p is TOP or q is TOP:
        return TOP
    if len(p) != len(q):
        raise ValueError("size mismatch")
    m = tuple(max(a, b) for a, b in zip(p, q))
    return m if is_parking_function(m) else TOP


def all_parking_functions(n: int) -> list[tuple[int, ...]]:
    return [
        p
        for p in itertools.product(range(1, n + 1), repeat=n)
        if is_parking_function(p)
    ]


def parking_poset(n: int) -> FinitePoset:
    """The parking functions of size n with the adjoined top."""
    labels: list[ParkingFunction] = list(all_parking_functions(n))
    labels.append(TOP)
    return FinitePoset.from_leq(labels, lambda a, b: (a is b) or pf_leq(a, b))


def pentagon_witness(n: int):
    """Five elements of the parking lattice forming an N5 sublattice.

    The witness lives on the first three coordinates; the remaining
    coordinates are padded with 4, 5, ..., n (forced preferences, so the
    joins of the incomparable pairs stay non-parking).  Checked to be
    closed under meet and join and to have the pentagon's
    comparabilities.
    """
    if n < 3:
        raise ValueError("pentagon witness requires n >= 3")
    pad = tuple(range(4, n + 1))
    bottom = (1, 1, 1) + pad
    side = (3, 1, 1) + pad
    low = (1, 1, 3) + pad
    high = (1, 2, 3) + pad
    elements = (bottom, side, low, high, TOP)
    for p in (side, low, high):
        assert is_parking_function(p)
    members = set(elements)
    for a, b in itertools.combinations(elements, 2):
        assert pf_meet(a, b) in members and pf_join(a, b) in members
    assert pf_leq(low, high) and not pf_leq(high, low)
    assert not pf_leq(side, low) and not pf_leq(low, side)
    assert not pf_leq(side, high) and not pf_leq(high, side)
    assert pf_meet(side, low) == bottom and pf_meet(side, high) == bottom
    assert pf_join(side, low) is TOP and pf_join(side, high) is TOP
    return elements


def format_parking(p: ParkingFunction) -> str:
    if p is TOP:
        return "T"
    return ",".join(str(v) for v in p)


def parse_parking(text: str) -> ParkingFunction:
    text = text.strip()
    if text == "T":
        return TOP
    try:
        prefs = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"bad parking function {text!r}") from exc
    return validate_parking_function(prefs)
