import pytest
from hypothesis import given, strategies as st

from middleorder.permutations import (
    MeshPattern,
    all_inversion_sequences,
    all_permutations,
    avoids_classical,
    count_classical,
    cycle_count,
    cycles,
    foata_image,
    format_inversion_sequence,
    format_permutation,
    from_inversion_sequence,
    identity,
    inverse,
    inversion_sequence,
    is_involution,
    long_element,
    mesh_contains,
    parse_inversion_sequence,
    parse_permutation,
    right_to_left_minima,
    round_trip_all,
    validate_inversion_sequence,
    validate_permutation,
)

perms = st.integers(min_value=1, max_value=8).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))
).map(tuple)


def test_worked_example():
    assert inversion_sequence((4, 1, 5, 6, 2, 3)) == (0, 0, 0, 3, 2, 2)
    assert from_inversion_sequence((0, 0, 0, 3, 2, 2)) == (4, 1, 5, 6, 2, 3)


def test_small_cases():
    assert inversion_sequence((1,)) == (0,)
    assert inversion_sequence((3, 2, 1)) == (0, 1, 2)
    assert from_inversion_sequence((0, 1, 2)) == (3, 2, 1)
    assert inversion_sequence(identity(5)) == (0, 0, 0, 0, 0)
    assert inversion_sequence(long_element(5)) == (0, 1, 2, 3, 4)


@pytest.mark.parametrize("n", range(1, 8))
def test_round_trip_exhaustive(n):
    assert round_trip_all(n)


@given(perms)
def test_round_trip_property(w):
    assert from_inversion_sequence(inversion_sequence(w)) == w


@given(perms)
def test_inverse_is_involutive(w):
    assert inverse(inverse(w)) == w


def test_validation_rejects_garbage():
    with pytest.raises(ValueError):
        validate_permutation(())
    with pytest.raises(ValueError):
        validate_permutation((1, 1, 2))
    with pytest.raises(ValueError):
        validate_permutation((0, 1))
    with pytest.raises(ValueError):
        validate_inversion_sequence((0, 2))
    with pytest.raises(ValueError):
        validate_inversion_sequence(())


def test_enumeration_order_is_invseq_lex():
    seqs = list(all_inversion_sequences(3))
    assert seqs == [(0, 0, 0), (0, 0, 1), (0, 0, 2),
                    (0, 1, 0), (0, 1, 1), (0, 1, 2)]
    assert all_permutations(3) == [from_inversion_sequence(x) for x in seqs]


# -- patterns ----------------------------------------------------------------


def test_classical_counting():
    assert count_classical((1, 4, 2, 3), (1, 2)) == 4
    assert avoids_classical((1, 2, 3), (2, 1))
    assert not avoids_classical((2, 1, 3), (2, 1))


def test_mesh_example_1423():
    rise = MeshPattern((1, 2))
    meshed = MeshPattern((1, 2), {(1, 0), (1, 1)})
    assert mesh_contains((1, 4, 2, 3), rise) == 4
    assert mesh_contains((1, 4, 2, 3), meshed) == 3


def test_mesh_cell_bounds():
    with pytest.raises(ValueError):
        MeshPattern((1, 2), {(3, 0)})


def test_fully_shaded_single_cell():
    # shading every cell forces the occurrence to be the whole word
    k = 3
    full = MeshPattern((1, 3, 2), {(a, b) for a in range(k + 1) for b in range(k + 1)})
    assert mesh_contains((1, 3, 2), full) == 1
    assert mesh_contains((1, 4, 2, 3), full) == 0


@given(perms)
def test_empty_mesh_equals_classical(w):
    p = (2, 1, 3)
    assert mesh_contains(w, MeshPattern(p)) == count_classical(w, p)


# -- cycles and Foata ---------------------------------------------------------


def test_cycles():
    assert cycles((4, 1, 5, 6, 2, 3)) == [(1, 4, 6, 3, 5, 2)]
    assert cycles((2, 1, 3)) == [(1, 2), (3,)]
    assert cycle_count(identity(6)) == 6


def test_involution_predicate():
    assert is_involution((2, 1, 4, 3))
    assert not is_involution((2, 3, 1))


def test_foata_image_example():
    assert foata_image((3, 2, 1)) == (3, 1, 2)
    assert foata_image(identity(4)) == identity(4)


@pytest.mark.parametrize("n", range(1, 7))
def test_foata_is_a_bijection_matching_statistics(n):
    images = set()
    for w in all_permutations(n):
        img = foata_image(w)
        images.add(img)
        assert cycle_count(w) == len(right_to_left_minima(img))
    assert len(images) == len(all_permutations(n))


@given(perms)
def test_rl_minima_are_zero_coordinates(w):
    x = inversion_sequence(w)
    assert right_to_left_minima(w) == {i for i in range(1, len(w) + 1) if x[i - 1] == 0}


# -- serialization -------------------------------------------------------------


def test_format_parse_round_trip():
    assert format_permutation((4, 1, 5, 6, 2, 3)) == "415623"
    assert parse_permutation("415623") == (4, 1, 5, 6, 2, 3)
    big = tuple(range(12, 0, -1))
    assert parse_permutation(format_permutation(big)) == big
    assert format_inversion_sequence((0, 0, 2)) == "0,0,2"
    assert parse_inversion_sequence("0,0,2") == (0, 0, 2)


def test_parse_rejects_bad_input():
    for text in ("", "abc", "1,x", "122"):
        with pytest.raises(ValueError):
            parse_permutation(text)
    with pytest.raises(ValueError):
        parse_inversion_sequence("0,9")
