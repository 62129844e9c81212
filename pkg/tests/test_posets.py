import random

import pytest

from middleorder.posets import (
    FinitePoset,
    PosetError,
    antichain,
    boolean_lattice,
    chain,
    chain_product,
    diamond,
    pentagon,
    product,
)


def divisor_poset(numbers):
    return FinitePoset.from_leq(list(numbers), lambda a, b: b % a == 0)


def random_dag_poset(rng, n):
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < 0.3
    ]
    return FinitePoset.from_covers(list(range(n)), pairs)


# -- construction ---------------------------------------------------------------


def test_from_covers_rejects_cycles_and_loops():
    with pytest.raises(PosetError):
        FinitePoset.from_covers([0, 1], [(0, 1), (1, 0)])
    with pytest.raises(PosetError):
        FinitePoset.from_covers([0], [(0, 0)])
    with pytest.raises(PosetError):
        FinitePoset.from_covers([0], [(0, 3)])


def test_from_leq_rejects_non_orders():
    with pytest.raises(PosetError):
        FinitePoset.from_leq([0, 1], lambda a, b: True)  # not antisymmetric
    with pytest.raises(PosetError):
        FinitePoset.from_leq([0, 1], lambda a, b: a == b + 1 or a == b - 1 or a == b)


def test_duplicate_labels_rejected():
    with pytest.raises(PosetError):
        FinitePoset.from_covers([0, 0], [])


def test_transitive_reduction_round_trip_random_dags():
    rng = random.Random(7)
    for n in (5, 20, 60, 100):
        p = random_dag_poset(rng, n)
        q = FinitePoset.from_covers(p.labels, list(p.covers))
        assert q._above == p._above
        assert q.covers == p.covers


def test_reduction_drops_implied_edges():
    p = FinitePoset.from_covers([0, 1, 2], [(0, 1), (1, 2), (0, 2)])
    assert p.covers == {(0, 1), (1, 2)}


# -- basic queries ----------------------------------------------------------------


def test_leq_and_extremes():
    p = divisor_poset([1, 2, 3, 4, 6, 12])
    assert p.leq_labels(2, 12) and not p.leq_labels(4, 6)
    assert [p.labels[i] for i in p.minimal_elements()] == [1]
    assert [p.labels[i] for i in p.maximal_elements()] == [12]
    assert p.cover_labels() == {(1, 2), (1, 3), (2, 4), (2, 6), (3, 6), (4, 12), (6, 12)}


def test_interval_elements():
    p = divisor_poset([1, 2, 3, 4, 6, 12])
    inside = {p.labels[i] for i in p.interval_elements(p.index_of(2), p.index_of(12))}
    assert inside == {2, 4, 6, 12}
    assert len(p.enumerate_intervals()) == sum(
        1 for a in p.labels for b in p.labels if b % a == 0
    )


# -- Moebius ----------------------------------------------------------------------


def test_mobius_on_known_posets():
    b3 = boolean_lattice(3)
    bot, top = b3.index_of(()), b3.index_of((0, 1, 2))
    assert b3.mobius(bot, top) == -1
    c = chain(4)
    assert c.mobius(0, 0) == 1 and c.mobius(0, 1) == -1 and c.mobius(0, 2) == 0
    d = divisor_poset([1, 2, 3, 5, 30, 6, 10, 15])
    # classical number-theoretic Moebius values
    assert d.mobius_labels(1, 30) == -1
    assert d.mobius_labels(1, 6) == 1
    assert d.mobius_labels(1, 2) == -1


@pytest.mark.parametrize("maker", [lambda: boolean_lattice(3), pentagon, diamond,
                                   lambda: chain_product((2, 3, 3))])
def test_mobius_sum_rule(maker):
    p = maker()
    for i, j in p.enumerate_intervals():
        if i != j:
            assert sum(p.mobius(i, t) for t in p.interval_elements(i, j)) == 0


# -- gradedness ---------------------------------------------------------------------


def test_graded_with_ranks():
    graded, ranks = boolean_lattice(3).is_graded()
    assert graded
    b3 = boolean_lattice(3)
    assert all(ranks[i] == len(b3.labels[i]) for i in range(b3.n))


def test_ungraded_witness_chains():
    graded, (short, long) = pentagon().is_graded()
    assert not graded
    assert short[0] == long[0] and short[-1] == long[-1]
    assert len(short) != len(long)


# -- lattice structure -----------------------------------------------------------------


def test_lattice_recognition():
    assert boolean_lattice(3).is_lattice()
    assert chain_product((2, 2, 3)).is_lattice()
    assert not antichain(2).is_lattice()
    two_tops = FinitePoset.from_covers([0, 1, 2], [(0, 1), (0, 2)])
    assert not two_tops.is_lattice()


def test_distributive_recognition():
    assert boolean_lattice(3).is_distributive()
    assert chain(5).is_distributive()
    assert not pentagon().is_distributive()
    assert not diamond().is_distributive()


def test_sublattice_witnesses():
    assert pentagon().find_pentagon() is not None
    assert pentagon().find_diamond() is None
    assert diamond().find_diamond() is not None
    assert diamond().find_pentagon() is None
    assert boolean_lattice(3).find_pentagon() is None
    assert boolean_lattice(3).find_diamond() is None


def test_distributivity_checkers_agree():
    posets = [
        boolean_lattice(3),
        boolean_lattice(4),
        pentagon(),
        diamond(),
        chain(6),
        chain_product((2, 3, 4)),
        product(pentagon(), chain(2)),
        product(diamond(), chain(2)),
    ]
    for p in posets:
        assert p.n <= 30
        if not p.is_lattice():
            continue
        assert p.is_distributive() == p.is_distributive_by_sublattices()
        assert p.is_distributive() == (p.find_n5_or_m3_subset() is None)


# -- isomorphism ------------------------------------------------------------------------


def test_isomorphism_basics():
    assert chain(2).are_isomorphic(chain(2))
    assert not chain(2).are_isomorphic(antichain(2))
    assert boolean_lattice(3).are_isomorphic(chain_product((2, 2, 2)))
    assert not boolean_lattice(3).are_isomorphic(chain_product((2, 4)))
    assert pentagon().are_isomorphic(
        FinitePoset.from_covers("vwxyz", [(0, 2), (2, 3), (3, 1), (0, 4), (4, 1)])
    )
    assert not pentagon().are_isomorphic(diamond())


def test_isomorphism_size_cap():
    with pytest.raises(PosetError):
        chain(65).are_isomorphic(chain(65))


def test_isomorphism_under_relabeling_shuffle():
    rng = random.Random(11)
    p = boolean_lattice(4)
    order = list(range(p.n))
    rng.shuffle(order)
    q = p.induced_subposet([p.labels[i] for i in order])
    assert p.are_isomorphic(q)


# -- import / export ----------------------------------------------------------------------


def test_edge_list_round_trip():
    p = divisor_poset([1, 2, 3, 6])
    q = FinitePoset.from_edge_list(p.to_edge_list())
    assert q.cover_labels() == {(str(a), str(b)) for a, b in p.cover_labels()}
    with pytest.raises(PosetError):
        FinitePoset.from_edge_list("1 2\n")


def test_dot_round_trip():
    p = boolean_lattice(2)
    q = FinitePoset.from_dot(p.to_dot())
    assert p.are_isomorphic(q)
    assert 'rankdir="BT"' in p.to_dot()


def test_dot_includes_isolated_nodes():
    p = antichain(3)
    q = FinitePoset.from_dot(p.to_dot())
    assert q.n == 3 and not q.covers
