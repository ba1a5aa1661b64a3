import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import random_pairs, subset_search
from symcycles import (
    CapExceeded,
    CycleSpec,
    Decomposition,
    DimensionError,
    SignSet,
    Tope,
    UniquenessViolation,
    all_topes,
    bmax_plus,
    build_cycle,
    build_standard_cycle,
    decompose,
    decompose_oracle,
    local_bmax_criterion,
    partition_check,
    random_cycle,
    reorient,
)
from symcycles.decomposition import (
    decompose_by_bmax,
    is_linearly_independent,
    summing_subsets,
    vertex_sum,
)

P = Tope.parse


@st.composite
def cycles_and_sets(draw, max_t=10):
    t = draw(st.integers(1, max_t))
    spec = CycleSpec(
        Tope(t, draw(st.integers(0, (1 << t) - 1))),
        tuple(draw(st.permutations(range(1, t + 1)))),
    )
    return build_cycle(spec), SignSet(t, draw(st.integers(0, (1 << t) - 1)))


class TestBmaxPlus:
    def test_chain(self):
        assert bmax_plus([P("+++"), P("-++"), P("--+")]) == {0}

    def test_all_plus_dominates(self):
        seq = [P("-+-"), P("+++"), P("+-+"), P("+++")]
        assert bmax_plus(seq) == {1, 3}

    def test_standard_t3(self):
        assert bmax_plus(list(build_standard_cycle(3))) == {0}

    def test_incomparable(self):
        assert bmax_plus([P("+-"), P("-+"), P("--")]) == {0, 1}

    def test_errors(self):
        with pytest.raises(ValueError):
            bmax_plus([])
        with pytest.raises(DimensionError):
            bmax_plus([P("+"), P("++")])


class TestLocalCriterion:
    def test_standard_t3_empty(self):
        assert local_bmax_criterion(build_standard_cycle(3), SignSet(3, 0)) == {0}

    def test_t2_full_reorientation(self):
        c = build_standard_cycle(2)
        got = local_bmax_criterion(c, SignSet.from_members(2, {1, 2}))
        assert got == {c.index_of(P("--"))} == {2}

    @given(cycles_and_sets())
    @settings(max_examples=300)
    def test_matches_bmax(self, cs):
        cycle, s = cs
        assert local_bmax_criterion(cycle, s) == bmax_plus([reorient(v, s) for v in cycle])

    def test_matches_bmax_random_1000(self, rng):
        for _ in range(1000):
            t = rng.randint(1, 10)
            cycle = random_cycle(t, rng)
            s = SignSet(t, rng.getrandbits(t))
            assert local_bmax_criterion(cycle, s) == bmax_plus([reorient(v, s) for v in cycle])

    def test_exhaustive_t6(self):
        rng = random.Random(6)
        for t in range(1, 7):
            for _ in range(3):
                cycle = random_cycle(t, rng)
                for mask in range(1 << t):
                    s = SignSet(t, mask)
                    assert local_bmax_criterion(cycle, s) == bmax_plus(
                        [reorient(v, s) for v in cycle]
                    )


class TestDecompose:
    def test_cycle_vertex_is_singleton(self, rng):
        for t in range(1, 9):
            c = random_cycle(t, rng)
            for k in range(2 * t):
                assert decompose(c[k], c) == Decomposition((k,))

    def test_t3_example(self):
        d = decompose(P("+-+"), build_standard_cycle(3))
        assert d.cycle_indices == (0, 2, 4) and d.cardinality == 3

    def test_t3_example_by_subset_search(self):
        c = build_standard_cycle(3)
        hits = subset_search(P("+-+"), c)
        assert hits[0] == (0, 2, 4)
        # every other summing subset contains it
        assert all(set(hits[0]) <= set(h) for h in hits)

    def test_t2_all_singletons(self):
        c = build_standard_cycle(2)
        assert all(decompose(x, c).cardinality == 1 for x in all_topes(2))

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            decompose(P("++"), build_standard_cycle(3))

    def test_indices_sorted(self):
        assert Decomposition((4, 0, 2)).cycle_indices == (0, 2, 4)

    def test_exhaustive_properties(self, rng):
        for t in range(1, 9):
            for cycle in [build_standard_cycle(t), random_cycle(t, rng)]:
                for x in all_topes(t):
                    d = decompose(x, cycle)
                    assert d.cardinality % 2 == 1
                    assert vertex_sum(cycle, d.cycle_indices) == x.signs
                    assert is_linearly_independent(d.vertices(cycle))
                    assert decompose_by_bmax(x, cycle) == d
                    shifted = tuple(sorted((k + t) % (2 * t) for k in d.cycle_indices))
                    assert decompose(-x, cycle).cycle_indices == shifted


class TestOracle:
    def test_cycle_vertex(self):
        c = build_standard_cycle(4)
        assert decompose_oracle(c[5], c) == Decomposition((5,))

    def test_t3_all_targets(self):
        c = build_standard_cycle(3)
        for x in all_topes(3):
            assert decompose_oracle(x, c) == decompose(x, c)
            assert decompose_oracle(x, c).cycle_indices == subset_search(x, c)[0]

    def test_t5_random_100(self, rng):
        for x, c in random_pairs(5, 100, rng):
            assert decompose_oracle(x, c) == decompose(x, c)

    def test_exhaustive_small_random_cycles(self, rng):
        for t in range(1, 7):
            for _ in range(4):
                c = random_cycle(t, rng)
                for x in all_topes(t):
                    assert decompose_oracle(x, c) == decompose(x, c)

    def test_sampled_t10(self, rng):
        for x, c in random_pairs(10, 3, rng):
            assert decompose_oracle(x, c) == decompose(x, c)

    def test_cap(self):
        c = build_standard_cycle(11)
        with pytest.raises(CapExceeded):
            decompose_oracle(c[0], c)
        c = build_standard_cycle(4)
        with pytest.raises(CapExceeded):
            decompose_oracle(c[0], c, cap=3)

    def test_summing_subsets_enumeration(self):
        c = build_standard_cycle(3)
        x = P("+-+")
        expected = sorted(sum(1 << k for k in h) for h in subset_search(x, c))
        assert sorted(summing_subsets(x, c, block=5)) == expected

    def test_uniqueness_violation_raised(self, monkeypatch):
        import symcycles.decomposition as dec

        c = build_standard_cycle(3)
        # two disjoint sets {0} and {1} cannot both be minimal in a real cycle
        monkeypatch.setattr(dec, "summing_subsets", lambda target, cycle: [0b1, 0b10])
        with pytest.raises(UniquenessViolation):
            dec.decompose_oracle(c[0], c)


class TestPartition:
    def test_t2(self):
        assert partition_check(build_standard_cycle(2))

    @pytest.mark.parametrize("t", range(1, 9))
    def test_standard(self, t):
        assert partition_check(build_standard_cycle(t))

    def test_random(self, rng):
        for t in range(3, 9):
            assert partition_check(random_cycle(t, rng))

    def test_refuses_raw_sequence(self):
        with pytest.raises(TypeError):
            partition_check([P("++"), P("--"), P("-+"), P("+-")])

    def test_cap(self):
        with pytest.raises(CapExceeded):
            partition_check(build_standard_cycle(6), cap=5)
