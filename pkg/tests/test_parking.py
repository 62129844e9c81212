import itertools

import pytest

from middleorder.parking import (
    TOP,
    all_parking_functions,
    format_parking,
    is_parking_function,
    parking_poset,
    parking_simulation,
    parse_parking,
    pentagon_witness,
    pf_join,
    pf_leq,
    pf_meet,
    validate_parking_function,
)
from middleorder.posets import FinitePoset, pentagon


def test_membership_examples():
    assert is_parking_function((1, 1, 1))
    assert is_parking_function((3, 1, 1))
    assert is_parking_function((2, 1, 3))
    assert not is_parking_function((2, 2, 3))
    assert not is_parking_function((3, 3, 1))


@pytest.mark.parametrize("n", range(1, 6))
def test_criterion_matches_simulation(n):
    for p in itertools.product(range(1, n + 1), repeat=n):
        assert is_parking_function(p) == parking_simulation(p)


@pytest.mark.parametrize("n", range(1, 8))
def test_counts(n):
    assert len(all_parking_functions(n)) == (n + 1) ** (n - 1)


@pytest.mark.parametrize("n", range(1, 6))
def test_closed_under_rearrangement(n):
    for p in all_parking_functions(n):
        for q in set(itertools.permutations(p)):
            assert is_parking_function(q)


def test_validation():
    assert validate_parking_function([1, 1, 2]) == (1, 1, 2)
    with pytest.raises(ValueError):
        validate_parking_function([2, 2, 3])
    with pytest.raises(ValueError):
        validate_parking_function([0, 1])
    with pytest.raises(ValueError):
        validate_parking_function([])


def test_order_operations():
    assert pf_leq((1, 1, 2), (1, 2, 3))
    assert not pf_leq((2, 1, 1), (1, 2, 3))
    assert pf_leq((1, 2, 3), TOP) and not pf_leq(TOP, (1, 2, 3))
    assert pf_meet((3, 1, 1), (1, 2, 3)) == (1, 1, 1)
    assert pf_meet(TOP, (1, 2, 3)) == (1, 2, 3)
    assert pf_join((1, 1, 2), (1, 2, 1)) == (1, 2, 2)
    assert pf_join((3, 1, 1), (1, 1, 3)) is TOP
    assert pf_join(TOP, (1, 1, 1)) is TOP


@pytest.mark.parametrize("n", range(1, 5))
def test_meet_join_are_actual_bounds(n):
    pfs = all_parking_functions(n) + [TOP]
    for p in pfs:
        for q in pfs:
            m, j = pf_meet(p, q), pf_join(p, q)
            assert pf_leq(m, p) and pf_leq(m, q)
            assert pf_leq(p, j) and pf_leq(q, j)
            if m is not TOP:
                assert is_parking_function(m) or m is TOP
            # the join is least: any common upper bound dominates it
            for u in pfs:
                if pf_leq(p, u) and pf_leq(q, u):
                    assert pf_leq(j, u)


@pytest.mark.parametrize("n", range(1, 5))
def test_parking_poset_is_a_lattice(n):
    poset = parking_poset(n)
    assert poset.n == (n + 1) ** (n - 1) + 1
    assert poset.is_lattice()


@pytest.mark.parametrize("n", (3, 4))
def test_parking_lattice_is_not_modular(n):
    poset = parking_poset(n)
    assert not poset.is_distributive()
    assert poset.find_pentagon() is not None


@pytest.mark.parametrize("n", (3, 4, 5))
def test_pentagon_witness(n):
    elements = pentagon_witness(n)
    sub = FinitePoset.from_leq(list(elements), pf_leq)
    assert sub.are_isomorphic(pentagon())
    with pytest.raises(ValueError):
        pentagon_witness(2)


def test_serialization():
    assert format_parking(TOP) == "T"
    assert format_parking((1, 1, 2)) == "1,1,2"
    assert parse_parking("T") is TOP
    assert parse_parking("1,1,2") == (1, 1, 2)
    with pytest.raises(ValueError):
        parse_parking("2,2,3")
    with pytest.raises(ValueError):
        parse_parking("x")
