import itertools
import math
import random

import pytest

from symcycles import (
    CapExceeded,
    DimensionError,
    all_topes,
    build_standard_cycle,
    census,
    decompose,
    gamma_polynomial,
    global_identities,
    intersection_number_p2,
    random_cycle,
    s_value,
    symmetry_relations,
)
from symcycles.stats import (
    CensusTable,
    edge_sum_via_p2,
    format_polynomial,
    intersection_table_p2_bruteforce,
)

# gamma_t(x) as tabulated for t = 2..10, plus gamma_1 = 2x
GAMMA_TABLE = {
    1: "2x",
    2: "4x",
    3: "6x + 2x^3",
    4: "8x + 8x^3",
    5: "10x + 20x^3 + 2x^5",
    6: "12x + 40x^3 + 12x^5",
    7: "14x + 70x^3 + 42x^5 + 2x^7",
    8: "16x + 112x^3 + 112x^5 + 16x^7",
    9: "18x + 168x^3 + 252x^5 + 72x^7 + 2x^9",
    10: "20x + 240x^3 + 504x^5 + 240x^7 + 20x^9",
}


def slow_census(cycle):
    counts = {}
    for x in all_topes(cycle.t):
        q = decompose(x, cycle).cardinality
        counts[q] = counts.get(q, 0) + 1
    return counts


def p2_words(t, i, j):
    X = (1,) * t
    Y = (-1, -1) + (1,) * (t - 2)
    dist = lambda a, b: sum(u != v for u, v in zip(a, b))
    return sum(
        1 for Z in itertools.product((1, -1), repeat=t) if dist(Z, X) == i and dist(Z, Y) == j
    )


class TestCensus:
    def test_t5(self):
        assert census(build_standard_cycle(5)).counts == {1: 10, 3: 20, 5: 2}

    def test_t8(self):
        assert census(build_standard_cycle(8)).counts == {1: 16, 3: 112, 5: 112, 7: 16}

    def test_t1(self):
        table = census(build_standard_cycle(1))
        assert table.counts == {1: 2}
        assert table.satisfies_invariants()

    def test_matches_per_vertex_decompose(self, rng):
        for t in range(1, 11):
            c = random_cycle(t, rng)
            expected = dict.fromkeys(range(1, t + 1, 2), 0)
            expected.update(slow_census(c))
            assert census(c).counts == expected

    def test_cycle_independent(self, rng):
        for t in range(2, 11):
            tables = {tuple(sorted(census(random_cycle(t, rng)).counts.items())) for _ in range(4)}
            assert len(tables) == 1

    def test_invariants(self):
        for t in range(2, 13):
            assert census(build_standard_cycle(t)).satisfies_invariants()

    def test_threads_same_result(self, monkeypatch):
        import symcycles.stats as st

        monkeypatch.setattr(st, "BLOCK", 1 << 8)
        c = build_standard_cycle(12)
        assert census(c, workers=4) == census(c, workers=1)

    def test_cap(self):
        with pytest.raises(CapExceeded):
            census(build_standard_cycle(10), cap=9)

    def test_records(self):
        assert census(build_standard_cycle(3)).records() == "# j c_j\n1 6\n3 2"


class TestGamma:
    @pytest.mark.parametrize("t", sorted(GAMMA_TABLE))
    def test_table(self, t):
        assert format_polynomial(gamma_polynomial(t)) == GAMMA_TABLE[t]
        assert census(build_standard_cycle(t)).polynomial() == GAMMA_TABLE[t]

    def test_census_equivalence(self, rng):
        for t in range(1, 13):
            assert census(random_cycle(t, rng)).counts == gamma_polynomial(t)

    def test_format_zero(self):
        assert format_polynomial({1: 0}) == "0"


class TestIntersectionNumbers:
    def test_examples(self):
        assert intersection_number_p2(3, 1, 1) == p2_words(3, 1, 1) == 2
        assert intersection_number_p2(4, 3, 1) == p2_words(4, 3, 1) == 2
        assert intersection_number_p2(5, 2, 1) == 0

    @pytest.mark.parametrize("t", range(2, 9))
    def test_against_word_enumeration(self, t):
        table = intersection_table_p2_bruteforce(t)
        for i in range(t + 1):
            for j in range(t + 1):
                assert intersection_number_p2(t, i, j) == table[i, j] == p2_words(t, i, j)

    def test_small_t(self):
        with pytest.raises(DimensionError):
            intersection_number_p2(1, 0, 0)


class TestSValue:
    def test_small(self):
        assert s_value(2) == 4
        assert s_value(3) == 8
        assert s_value(10) == 1024

    def test_recursion(self):
        for t in range(3, 21):
            assert s_value(t) == 2 * s_value(t - 1) == 1 << t

    def test_edge_sum_route(self):
        for t in range(2, 21):
            assert edge_sum_via_p2(t) == (1 << (t - 1)) * t


class TestGlobalIdentities:
    def test_t3(self):
        g = global_identities(build_standard_cycle(3))
        assert g.edge_sum == 12 == 6 * 1 + 2 * 3
        assert g.distance_sum == 6
        assert g.edge_sum_ok and g.distance_sum_ok

    def test_t2(self):
        g = global_identities(build_standard_cycle(2))
        assert g.distance_sum == 0 and g.edge_sum_ok and g.distance_sum_ok

    def test_t1_degenerate(self):
        # two vertices on a 2-cycle, one edge in H(1,2)
        g = global_identities(build_standard_cycle(1))
        assert g.edge_sum == 2 and not g.edge_sum_ok

    def test_against_slow_sum(self):
        from symcycles import decomposition_distance_sum

        for t in range(2, 9):
            c = random_cycle(t, random.Random(t))
            g = global_identities(c)
            assert g.distance_sum == sum(decomposition_distance_sum(x, c) for x in all_topes(t))


class TestSymmetry:
    def test_t10(self):
        c = census(build_standard_cycle(10)).counts
        assert c[3] == c[7] == 240
        assert symmetry_relations(10)

    def test_t9(self):
        c = census(build_standard_cycle(9)).counts
        assert 3 * c[3] == 504 == 7 * c[7]
        assert symmetry_relations(9)

    def test_t4(self):
        c = census(build_standard_cycle(4)).counts
        assert c[1] == c[3] == 8

    def test_detects_broken_table(self):
        assert not symmetry_relations(4, CensusTable(4, {1: 8, 3: 7}))
        assert not symmetry_relations(5, CensusTable(5, {1: 10, 3: 20, 5: 3}))

    def test_binomial_closed_form_agrees(self):
        for t in range(2, 13):
            counts = census(build_standard_cycle(t)).counts
            assert symmetry_relations(t)
            assert all(n == 2 * math.comb(t, j) for j, n in counts.items())
