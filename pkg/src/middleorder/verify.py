"""
Named verification suites cross-checking every closed form in the
package against brute force.

Each suite returns a list of CheckResult records; a suite passes when
every record does.  Failures carry a counterexample in the detail
field.  The caps below keep the default runs fast; callers may lower
them via n_max but the per-check hard caps are not exceeded.
"""
from __future__ import annotations

import itertools
import math
from typing import NamedTuple

from . import counting, heyting, involutions, orders, parking, posets
from .permutations import (
    MeshPattern,
    all_inversion_sequences,
    all_permutations,
    avoids_classical,
    cycle_count,
    foata_image,
    from_inversion_sequence,
    identity,
    inversion_sequence,
    is_involution,
    mesh_contains,
    right_to_left_minima,
    round_trip_all,
)

TABLE1 = {
    1: (1,),
    2: (2, 1),
    3: (6, 7, 4, 1),
    4: (24, 46, 49, 36, 18, 6, 1),
    5: (120, 326, 501, 562, 497, 354, 204, 94, 33, 8, 1),
}

TABLE2 = {
    1: (1,),
    2: (2, 1),
    3: (6, 7, 2),
    4: (24, 46, 29, 6),
    5: (120, 326, 329, 146, 24),
}


class CheckResult(NamedTuple):
    name: str
    ok: bool
    detail: str = ""


def _check(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name, bool(ok), "" if ok else detail)


# ---------------------------------------------------------------------------
# bijection


def suite_bijection(n_max: int = 7) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 8) + 1):
        out.append(_check(f"round-trip bijection n={n}", round_trip_all(n)))
    for n in range(1, min(n_max, 7) + 1):
        bad = None
        for w in all_permutations(n):
            x = inversion_sequence(w)
            zeros = {i for i in range(1, n + 1) if x[i - 1] == 0}
            if right_to_left_minima(w) != zeros:
                bad = w
                break
        out.append(_check(f"RL-minima are the zero coordinates n={n}", bad is None, f"w={bad}"))
    for n in range(1, min(n_max, 6) + 1):
        images = set()
        bad = None
        for w in all_permutations(n):
            img = foata_image(w)
            images.add(img)
            if cycle_count(w) != len(right_to_left_minima(img)):
                bad = w
                break
        ok = bad is None and len(images) == math.factorial(n)
        out.append(_check(f"Foata bijection n={n}", ok, f"w={bad}"))
    return out


# ---------------------------------------------------------------------------
# sandwich


def suite_sandwich(n_max: int = 6) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 6) + 1):
        index, weak = orders._closure(n, "weak")
        _, middle = orders._closure(n, "middle")
        _, bruhat = orders._closure(n, "bruhat")
        perms = all_permutations(n)
        ok_wm = all(weak[i] & ~middle[i] == 0 for i in range(len(perms)))
        ok_mb = all(middle[i] & ~bruhat[i] == 0 for i in range(len(perms)))
        out.append(_check(f"weak refined by middle n={n}", ok_wm))
        out.append(_check(f"middle refined by Bruhat n={n}", ok_mb))

        avoiders_213 = [w for w in perms if avoids_classical(w, (2, 1, 3))]
        mask_213 = sum(1 << index[w] for w in avoiders_213)
        ok_213 = all(
            middle[index[w]] & mask_213 == bruhat[index[w]] & mask_213
            for w in avoiders_213
        )
        out.append(_check(f"middle = Bruhat on 213-avoiders n={n}", ok_213))

        avoiders_132 = [w for w in perms if avoids_classical(w, (1, 3, 2))]
        mask_132 = sum(1 << index[w] for w in avoiders_132)
        ok_132 = all(
            middle[index[w]] & mask_132 == weak[index[w]] & mask_132
            for w in avoiders_132
        )
        out.append(_check(f"middle = weak on 132-avoiders n={n}", ok_132))
    return out


# ---------------------------------------------------------------------------
# mesh


def _mesh_swaps(v, shaded_test) -> set:
    """Permutations obtained by swapping a rise (j, i) of v whose
    between-region passes shaded_test(v, a, b)."""
    out = set()
    n = len(v)
    for a in range(n):
        for b in range(a + 1, n):
            if v[a] >= v[b]:
                continue
            if not shaded_test(v, a, b):
                continue
            word = list(v)
            word[a], word[b] = word[b], word[a]
            out.add(tuple(word))
    return out


def _middle_shading(v, a, b) -> bool:
    # below-and-between: no value smaller than the larger entry between
    # the two positions
    return not any(v[c] < v[b] for c in range(a + 1, b))


def _weak_shading(v, a, b) -> bool:
    # full column: no point at all between the two positions
    return b == a + 1


def _bruhat_shading(v, a, b) -> bool:
    # box: no intermediate value between the two positions
    return not any(v[a] < v[c] < v[b] for c in range(a + 1, b))


def suite_mesh(n_max: int = 6) -> list[CheckResult]:
    out = []
    rise = (1, 2)
    out.append(
        _check(
            "1423 classical rise count is 4",
            mesh_contains((1, 4, 2, 3), MeshPattern(rise)) == 4,
        )
    )
    out.append(
        _check(
            "1423 meshed rise count is 3",
            mesh_contains((1, 4, 2, 3), MeshPattern(rise, {(1, 0), (1, 1)})) == 3,
        )
    )
    for n in range(1, min(n_max, 6) + 1):
        bad = None
        for v in all_permutations(n):
            all_swaps = _mesh_swaps(v, lambda *_: True)
            mid = set(orders.upper_covers(v))
            if mid != _mesh_swaps(v, _middle_shading):
                bad = (v, "middle")
                break
            if _mesh_swaps(v, _weak_shading) != {
                w for w in all_swaps if orders.weak_covers(v, w)
            }:
                bad = (v, "weak")
                break
            if _mesh_swaps(v, _bruhat_shading) != {
                w for w in all_swaps if orders.bruhat_covers(v, w)
            }:
                bad = (v, "bruhat")
                break
            if any(orders.cover_mesh_witness(v, w) is None for w in mid):
                bad = (v, "witness")
                break
        out.append(_check(f"cover/mesh characterizations n={n}", bad is None, f"{bad}"))
    return out


# ---------------------------------------------------------------------------
# tables


def suite_tables(n_max: int = 8) -> list[CheckResult]:
    out = []
    for n in range(1, 6):
        out.append(
            _check(
                f"interval counts by rank match the published row n={n}",
                counting.intervals_by_rank(n) == TABLE1[n],
                f"{counting.intervals_by_rank(n)}",
            )
        )
        out.append(
            _check(
                f"boolean counts by rank match the published row n={n}",
                counting.boolean_by_rank(n) == TABLE2[n],
                f"{counting.boolean_by_rank(n)}",
            )
        )
    for n in range(1, min(n_max, 8) + 1):
        out.append(
            _check(
                f"rank row sums to total interval count n={n}",
                sum(counting.intervals_by_rank(n)) == counting.interval_count_total(n),
            )
        )
        out.append(
            _check(
                f"boolean row sums to (2n-1)!! n={n}",
                sum(counting.boolean_by_rank(n)) == counting.boolean_interval_total(n),
            )
        )
        out.append(
            _check(
                f"rank-0 intervals are the n! elements n={n}",
                counting.intervals_by_rank(n)[0] == math.factorial(n)
                and counting.boolean_by_rank(n)[0] == math.factorial(n),
            )
        )
    for n in range(1, min(n_max, 7) + 1):
        out.append(
            _check(
                f"polynomial row reverses onto interval row n={n}",
                tuple(reversed(counting.polynomial_row(n)))
                == counting.intervals_by_rank(n),
            )
        )
    for n in range(2, min(n_max, 7) + 1):
        cover_count = counting.covering_relation_count(n)
        reflection_sum = sum(
            n - cycle_count(w) for w in all_permutations(n)
        )
        out.append(
            _check(
                f"cover count equals total reflection length n={n}",
                cover_count == reflection_sum,
                f"{cover_count} vs {reflection_sum}",
            )
        )
    for n in range(1, min(n_max, 5) + 1):
        out.extend(_oracle_interval_checks(n))
    out.append(
        _check(
            "closed formula matches recursion for boolean counts to n=12",
            all(
                counting.boolean_by_rank(n)
                == counting._boolean_by_rank_recursive(n)
                for n in range(1, 13)
            ),
        )
    )
    return out


def _oracle_interval_checks(n: int) -> list[CheckResult]:
    poset = orders.middle_poset(n)
    graded, ranks = poset.is_graded()
    intervals = poset.enumerate_intervals()
    by_rank = [0] * (math.comb(n, 2) + 1)
    boolean_by_rank = [0] * n
    for i, j in intervals:
        k = ranks[j] - ranks[i]
        by_rank[k] += 1
        size = len(poset.interval_elements(i, j))
        if size == 2**k:
            sub = poset.induced_subposet(
                [poset.labels[t] for t in poset.interval_elements(i, j)]
            )
            if sub.are_isomorphic(posets.boolean_lattice(k)):
                boolean_by_rank[k] += 1
    return [
        _check(f"oracle-ranked intervals reproduce the closed row n={n}",
               tuple(by_rank) == counting.intervals_by_rank(n),
               f"{by_rank}"),
        _check(f"oracle-verified boolean intervals reproduce the closed row n={n}",
               tuple(boolean_by_rank) == counting.boolean_by_rank(n),
               f"{boolean_by_rank}"),
        _check(f"oracle interval total n={n}",
               len(intervals) == counting.interval_count_total(n)),
    ]


# ---------------------------------------------------------------------------
# mobius


def suite_mobius(n_max: int = 5) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 5) + 1):
        poset = orders.middle_poset(n)
        bad = None
        for i, v in enumerate(poset.labels):
            for j, w in enumerate(poset.labels):
                if orders.mobius_middle(v, w) != poset.mobius(i, j):
                    bad = (v, w)
                    break
            if bad:
                break
        out.append(
            _check(f"closed-form Moebius matches oracle on all pairs n={n}",
                   bad is None, f"{bad}")
        )
    for n in range(1, min(n_max, 5) + 1):
        ji = orders.join_irreducibles(n)
        by_cover = {w for w in all_permutations(n) if _lower_cover_count(w) == 1}
        ok = set(ji) == by_cover and len(ji) == n * (n - 1) // 2
        out.append(_check(f"join-irreducibles are the single-cover elements n={n}", ok))
    return out


def _lower_cover_count(w) -> int:
    """Number of elements covered by w, found by scanning all of S_n."""
    return sum(1 for v in all_permutations(len(w)) if orders.middle_covers(v, w))


# ---------------------------------------------------------------------------
# involutions


def suite_involutions(n_max: int = 8) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 8) + 1):
        bad = None
        passing = 0
        for x in all_inversion_sequences(n):
            claim = involutions.involution_seq_check(x)
            truth = is_involution(from_inversion_sequence(x))
            if claim != truth:
                bad = x
                break
            if claim:
                passing += 1
        ok = bad is None and passing == involutions.involution_count(n)
        out.append(_check(f"inversion-sequence involution test n={n}", ok, f"x={bad}"))
    for n in range(1, min(n_max, 8) + 1):
        bad = None
        for w in involutions.all_involutions(n):
            x = inversion_sequence(w)
            slow = involutions.is_slow_climbing(x)
            try:
                blocks = involutions.slow_climb_decompose(x)
                decomposed = True
                joined = tuple(v for block in blocks for v in block)
                if joined != x:
                    bad = x
                    break
            except ValueError:
                decomposed = False
            if slow != decomposed:
                bad = x
                break
        out.append(_check(f"slow-climbing equals block form n={n}", bad is None, f"{bad}"))
    for n in range(1, min(n_max, 7) + 1):
        bad = None
        slow_invs = [
            w for w in involutions.all_involutions(n)
            if involutions.is_slow_climbing(inversion_sequence(w))
        ]
        for v, w in itertools.combinations(slow_invs, 2):
            m = orders.meet(v, w)
            if not (is_involution(m) and involutions.is_slow_climbing(inversion_sequence(m))):
                bad = (v, w)
                break
        out.append(_check(f"meets of slow-climbers stay slow-climbing n={n}",
                          bad is None, f"{bad}"))
    for n in range(1, min(n_max, 7) + 1):
        bad = None
        for x in all_inversion_sequences(n):
            cl = involutions.clusters(x)
            covered = set()
            for a, b in cl:
                covered.update(range(a, b + 1))
            nested = any(
                (a1 <= a2 and b2 <= b1) or (a2 <= a1 and b1 <= b2)
                for (a1, b1), (a2, b2) in itertools.combinations(cl, 2)
            )
            if covered != set(range(1, n + 1)) or nested:
                bad = x
                break
        out.append(_check(f"clusters cover [1,n] and are incomparable n={n}",
                          bad is None, f"{bad}"))
    for n in range(2, min(n_max, 6) + 1):
        bad = None
        slow_pool = [
            v for v in involutions.all_involutions(n)
            if involutions.is_slow_climbing(inversion_sequence(v))
        ]
        for w in involutions.all_involutions(n):
            m_w = involutions.maximal_slow_climbing_below(w)
            below = [v for v in slow_pool if orders.middle_leq(v, w)]
            covered = all(any(orders.middle_leq(v, m) for m in m_w) for v in below)
            antichain = not any(
                orders.middle_leq(a, b)
                for a, b in itertools.permutations(m_w, 2)
            )
            if not (m_w and covered and antichain):
                bad = w
                break
        out.append(_check(f"maximal slow-climbers dominate every slow-climber n={n}",
                          bad is None, f"{bad}"))
    for n in range(1, min(n_max, 8) + 1):
        out.append(_mobius_involution_check(n))
    for n in range(1, min(n_max, 7) + 1):
        bad = None
        for w in involutions.all_involutions(n):
            x = inversion_sequence(w)
            if all(v in (0, 1) for v in x) and not any(
                a == b == 1 for a, b in zip(x, x[1:])
            ):
                if involutions.mobius_involution_ideal(w) != orders.mobius_middle(identity(n), w):
                    bad = w
                    break
        out.append(_check(f"boolean-ideal Moebius consistency n={n}", bad is None, f"{bad}"))
    if n_max >= 4:
        poset = involutions.involution_poset(4)
        graded, witness = poset.is_graded()
        out.append(_check("involutions of size 4 are not graded", not graded))
        out.append(_check("involutions of size 4 are not a lattice", not poset.is_lattice()))
    return out


def _mobius_involution_check(n: int) -> CheckResult:
    poset = involutions.involution_poset(n)
    bottom = poset.index_of(identity(n))
    bad = None
    for i, w in enumerate(poset.labels):
        if involutions.mobius_involution_ideal(w) != poset.mobius(bottom, i):
            bad = w
            break
    return _check(f"involution Moebius closed form matches oracle n={n}",
                  bad is None, f"w={bad}")


# ---------------------------------------------------------------------------
# heyting


def suite_heyting(n_max: int = 6) -> list[CheckResult]:
    out = []
    v = (3, 6, 1, 5, 9, 2, 7, 8, 4)
    w = (6, 1, 4, 9, 2, 8, 5, 3, 7)
    out.append(
        _check(
            "worked relative pseudocomplement example",
            heyting.relative_pseudocomplement(v, w) == (9, 8, 6, 4, 2, 1, 5, 3, 7),
        )
    )
    out.append(
        _check(
            "worked pseudocomplement example",
            heyting.pseudocomplement(v) == (4, 2, 1, 3, 5, 6, 7, 8, 9),
        )
    )
    for n in range(1, min(n_max, 4) + 1):
        out.append(_heyting_max_property(n))
        out.append(_heyting_adjunction(n))
    for n in range(1, min(n_max, 6) + 1):
        bad = None
        for p in all_permutations(n):
            ss = heyting.pseudocomplement(heyting.pseudocomplement(p))
            if not orders.middle_leq(p, ss):
                bad = p
                break
            if heyting.pseudocomplement(p) != heyting.pseudocomplement_by_listing(p):
                bad = p
                break
            heyting.is_regular(p)  # raises if the three criteria disagree
        out.append(_check(f"double negation inflates n={n}", bad is None, f"{bad}"))
    for n in range(1, min(n_max, 8) + 1):
        out.append(
            _check(
                f"2^(n-1) regular elements n={n}",
                len(heyting.regular_elements(n)) == 2 ** (n - 1),
            )
        )
    for n in range(1, min(n_max, 5) + 1):
        sub = heyting.regular_subposet(n)
        out.append(
            _check(
                f"regular elements form a boolean algebra n={n}",
                sub.are_isomorphic(posets.boolean_lattice(n - 1)),
            )
        )
    return out


def _heyting_max_property(n: int) -> CheckResult:
    seqs = list(all_inversion_sequences(n))
    bad = None
    for x in seqs:
        for y in seqs:
            valid = [
                z for z in seqs
                if all(min(a, c) <= b for a, b, c in zip(x, y, z))
            ]
            best = tuple(max(col) for col in zip(*valid))
            if best not in valid:
                bad = (x, y)
                break
            expected = inversion_sequence(
                heyting.relative_pseudocomplement(
                    from_inversion_sequence(x), from_inversion_sequence(y)
                )
            )
            if best != expected:
                bad = (x, y)
                break
        if bad:
            break
    return _check(f"relative pseudocomplement is the scanned maximum n={n}",
                  bad is None, f"{bad}")


def _heyting_adjunction(n: int) -> CheckResult:
    seqs = list(all_inversion_sequences(n))
    arrow = {}
    for x in seqs:
        for y in seqs:
            arrow[(x, y)] = tuple(
                i - 1 if x[i - 1] <= y[i - 1] else y[i - 1]
                for i in range(1, n + 1)
            )
    bad = None
    for x in seqs:
        for z in seqs:
            mz = tuple(min(a, b) for a, b in zip(x, z))
            for y in seqs:
                lhs = all(a <= b for a, b in zip(mz, y))
                rhs = all(a <= b for a, b in zip(z, arrow[(x, y)]))
                if lhs != rhs:
                    bad = (x, z, y)
                    break
            if bad:
                break
        if bad:
            break
    return _check(f"Heyting adjunction over all triples n={n}", bad is None, f"{bad}")


# ---------------------------------------------------------------------------
# parking


def suite_parking(n_max: int = 7) -> list[CheckResult]:
    out = []
    for n in range(1, min(n_max, 5) + 1):
        bad = None
        for p in itertools.product(range(1, n + 1), repeat=n):
            if parking.is_parking_function(p) != parking.parking_simulation(p):
                bad = p
                break
        out.append(_check(f"sorted criterion matches car simulation n={n}",
                          bad is None, f"{bad}"))
    for n in range(1, min(n_max, 5) + 1):
        bad = None
        for p in parking.all_parking_functions(n):
            if any(
                not parking.parking_simulation(r)
                for r in set(itertools.permutations(p))
            ):
                bad = p
                break
        out.append(_check(f"rearrangements of parking functions park n={n}",
                          bad is None, f"{bad}"))
    for n in range(1, min(n_max, 7) + 1):
        out.append(
            _check(
                f"(n+1)^(n-1) parking functions n={n}",
                len(parking.all_parking_functions(n)) == (n + 1) ** (n - 1),
            )
        )
    for n in range(1, min(n_max, 4) + 1):
        poset = parking.parking_poset(n)
        out.append(_check(f"parking poset with top is a lattice n={n}",
                          poset.is_lattice()))
        if n >= 3:
            quint = poset.find_pentagon()
            out.append(_check(f"parking lattice contains a pentagon n={n}",
                              quint is not None))
            out.append(_check(f"parking lattice is not distributive n={n}",
                              not poset.is_distributive()))
    for n in range(3, min(n_max, 5) + 1):
        elements = parking.pentagon_witness(n)
        sub = posets.FinitePoset.from_leq(
            elements, lambda a, b: parking.pf_leq(a, b)
        )
        out.append(
            _check(
                f"pentagon witness is isomorphic to N5 n={n}",
                sub.are_isomorphic(posets.pentagon()),
            )
        )
    return out


# ---------------------------------------------------------------------------


SUITES = {
    "bijection": suite_bijection,
    "sandwich": suite_sandwich,
    "mesh": suite_mesh,
    "tables": suite_tables,
    "mobius": suite_mobius,
    "involutions": suite_involutions,
    "heyting": suite_heyting,
    "parking": suite_parking,
}


def run_suite(name: str, n_max: int | None = None) -> list[CheckResult]:
    if name == "all":
        results = []
        for suite_name in SUITES:
            results.extend(run_suite(suite_name, n_max))
        return results
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}")
    func = SUITES[name]
    if n_max is None:
        return func()
    return func(n_max)
