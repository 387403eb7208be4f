import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qsets import (
    NotPure,
    OccupancyVector,
    Overflow,
    ScaleExceeded,
    StatKind,
    enumerate_occupancies,
    mb_weight,
    microstate_count,
    parse,
    quasi_function_count,
)

import oracles

BE, FD, MB = StatKind.BOSE_EINSTEIN, StatKind.FERMI_DIRAC, StatKind.MAXWELL_BOLTZMANN


class TestEnumerateOccupancies:
    def test_two_over_two(self):
        got = [v.counts for v in enumerate_occupancies(2, 2)]
        assert oracles.brute_occupancies(2, 2) == [(2, 0), (1, 1), (0, 2)]
        assert got == [(2, 0), (1, 1), (0, 2)]

    def test_exclusion_two_over_three(self):
        got = [v.counts for v in enumerate_occupancies(2, 3, exclusion=True)]
        assert oracles.brute_occupancies(2, 3, exclusion=True) == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]
        assert got == [(1, 1, 0), (1, 0, 1), (0, 1, 1)]

    def test_exclusion_impossible(self):
        assert enumerate_occupancies(3, 2, exclusion=True) == []

    @pytest.mark.parametrize("n,k", [(0, 0), (0, 3), (4, 1), (5, 4), (3, 6)])
    def test_matches_product_oracle(self, n, k):
        for exclusion in (False, True):
            got = [v.counts for v in enumerate_occupancies(n, k, exclusion)]
            assert got == oracles.brute_occupancies(n, k, exclusion)

    def test_scale_bound(self):
        with pytest.raises(ScaleExceeded):
            enumerate_occupancies(13, 2)
        with pytest.raises(ScaleExceeded):
            enumerate_occupancies(2, 13)

    def test_vector_bookkeeping(self):
        v = OccupancyVector((2, 0, 1))
        assert v.n == 3
        assert v.k == 3
        with pytest.raises(ValueError):
            OccupancyVector((1, -1))


class TestMicrostateCount:
    def test_spot_values(self):
        assert microstate_count(2, 3, BE) == 6
        assert microstate_count(2, 3, FD) == 3
        assert microstate_count(2, 3, MB) == 9

    def test_be_matches_enumeration(self):
        assert microstate_count(2, 3, BE) == len(enumerate_occupancies(2, 3))

    def test_fd_matches_exclusion_enumeration(self):
        assert microstate_count(2, 3, FD) == len(enumerate_occupancies(2, 3, exclusion=True))

    def test_mb_matches_labelled_brute_force(self):
        assert microstate_count(2, 3, MB) == oracles.brute_mb_count(2, 3)

    def test_closed_forms_match_pascal(self):
        for n in range(1, 9):
            for k in range(1, 9):
                assert microstate_count(n, k, BE) == oracles.pascal_binomial(n + k - 1, k - 1)
                assert microstate_count(n, k, FD) == oracles.pascal_binomial(k, n)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 8), st.integers(0, 8))
    def test_identities_all_small_scales(self, n, k):
        plain = enumerate_occupancies(n, k)
        assert microstate_count(n, k, BE) == len(plain)
        assert microstate_count(n, k, FD) == len(enumerate_occupancies(n, k, exclusion=True))
        assert microstate_count(n, k, MB) == sum(mb_weight(v) for v in plain) == k**n

    def test_order_fd_be_mb(self):
        for n in range(1, 9):
            for k in range(1, 9):
                fd = microstate_count(n, k, FD)
                be = microstate_count(n, k, BE)
                mb = microstate_count(n, k, MB)
                assert fd <= be <= mb

    def test_overflow_signalled(self):
        assert microstate_count(64, 2, MB) == 2**64
        with pytest.raises(Overflow):
            microstate_count(65, 2, MB)
        with pytest.raises(Overflow):
            microstate_count(200, 200, BE)

    def test_degenerate_scales(self):
        assert microstate_count(0, 0, BE) == 1
        assert microstate_count(3, 0, BE) == 0
        assert microstate_count(0, 5, MB) == 1
        assert microstate_count(0, 4, FD) == 1


class TestMbWeight:
    def test_all_in_one_state(self):
        assert mb_weight(OccupancyVector((2, 0))) == 1

    def test_split_matches_labelled_brute_force(self):
        assert oracles.brute_mb_weight((1, 1)) == 2
        assert mb_weight(OccupancyVector((1, 1))) == 2

    @pytest.mark.parametrize("vector", [(3, 0, 0), (2, 1, 0), (1, 1, 1), (0, 2, 2)])
    def test_matches_brute_force(self, vector):
        assert mb_weight(OccupancyVector(vector)) == oracles.brute_mb_weight(vector)

    def test_weights_sum_to_mb_count(self):
        total = sum(mb_weight(v) for v in enumerate_occupancies(3, 3))
        assert total == 27 == microstate_count(3, 3, MB)


class TestQuasiFunctionCount:
    def test_matches_be(self):
        assert quasi_function_count(parse("[m:e*2]"), 3) == 6
        assert quasi_function_count(parse("[m:e*2]"), 3) == microstate_count(2, 3, BE)

    def test_empty_source(self):
        assert quasi_function_count(parse("[]"), 5) == 1

    def test_single_particle(self):
        assert quasi_function_count(parse("[m:e]"), 4) == 4

    @pytest.mark.parametrize("text", ["[M:A]", "[m:e, m:p]", "[n:1]", "[[m:e]]"])
    def test_impure_sources_rejected(self, text):
        with pytest.raises(NotPure):
            quasi_function_count(parse(text), 3)
