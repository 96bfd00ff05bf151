"""Brute-force plethysm expansion.

The oracle goes through the power-sum basis and never touches the
closed formulas or the Littlewood-Richardson machinery, so agreement
elsewhere in the suite is meaningful.  Here we pin its own small
outputs and internal algebra.
"""

import math
from fractions import Fraction

import pytest

from foulkes.errors import ResourceBoundError
from foulkes.expansions import SchurExpansion, omega_schur, total_dimension
from foulkes.oracle import (
    DEFAULT_MAX_WEIGHT,
    oracle_plethysm_e2,
    oracle_plethysm_s2,
    p_plethysm_e2,
    p_plethysm_h2,
)
from foulkes.partitions import generate_partitions, irreducible_dimension


class TestPowerSumSubstitution:
    @pytest.mark.parametrize("r", range(1, 7))
    def test_h2_route(self, r):
        f = p_plethysm_h2(r)
        assert f[(r, r)] == Fraction(1, 2)
        assert f[(2 * r,)] == Fraction(1, 2)
        assert len(f) == 2

    @pytest.mark.parametrize("r", range(1, 7))
    def test_e2_route(self, r):
        f = p_plethysm_e2(r)
        assert f[(r, r)] == Fraction(1, 2)
        assert f[(2 * r,)] == Fraction(-1, 2)
        assert len(f) == 2

    @pytest.mark.parametrize("r", range(1, 7))
    def test_sum_and_difference(self, r):
        # h2 + e2 = p1*p1 and h2 - e2 = p2, composed with p_r.
        both = p_plethysm_h2(r) + p_plethysm_e2(r)
        assert dict(both.items()) == {(r, r): Fraction(1)}
        gap = p_plethysm_h2(r) - p_plethysm_e2(r)
        assert dict(gap.items()) == {(2 * r,): Fraction(1)}


class TestSmallExpansions:
    def test_single_cell(self):
        assert dict(oracle_plethysm_s2((1,)).items()) == {(2,): 1}
        assert dict(oracle_plethysm_e2((1,)).items()) == {(1, 1): 1}

    def test_size_two(self):
        assert dict(oracle_plethysm_s2((2,)).items()) == {(4,): 1, (2, 2): 1}
        assert dict(oracle_plethysm_s2((1, 1)).items()) == {(3, 1): 1}
        assert dict(oracle_plethysm_e2((2,)).items()) == {
            (2, 2): 1,
            (1, 1, 1, 1): 1,
        }
        assert dict(oracle_plethysm_e2((1, 1)).items()) == {(2, 1, 1): 1}

    def test_empty(self):
        assert dict(oracle_plethysm_s2(()).items()) == {(): 1}
        assert dict(oracle_plethysm_e2(()).items()) == {(): 1}

    def test_three_cells(self):
        assert dict(oracle_plethysm_s2((2, 1)).items()) == {
            (5, 1): 1,
            (4, 2): 1,
            (3, 2, 1): 1,
        }


class TestInvariants:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_duality(self, n):
        for nu in generate_partitions(n):
            assert omega_schur(oracle_plethysm_s2(nu)) == oracle_plethysm_e2(nu)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_dimension_identity(self, n):
        scale = math.factorial(2 * n) // (2**n * math.factorial(n))
        for nu in generate_partitions(n):
            for fn in (oracle_plethysm_s2, oracle_plethysm_e2):
                assert total_dimension(fn(nu)) == scale * irreducible_dimension(nu)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_nonnegative_and_homogeneous(self, n):
        for nu in generate_partitions(n):
            f = oracle_plethysm_s2(nu)
            assert f.degree == 2 * n
            assert all(mult > 0 for _, mult in f.items())

    def test_repeat_calls_hit_cache(self):
        a = oracle_plethysm_s2((3, 1))
        b = oracle_plethysm_s2((3, 1))
        assert a is b


class TestResourceCap:
    def test_default_cap_value(self):
        assert DEFAULT_MAX_WEIGHT == 9

    def test_over_cap_rejected(self):
        with pytest.raises(ResourceBoundError):
            oracle_plethysm_s2((3,) + (1,) * 9)
        with pytest.raises(ResourceBoundError):
            oracle_plethysm_e2((10,))

    def test_cap_override(self):
        f = oracle_plethysm_s2((10,), max_weight=10)
        assert f.degree == 20
        assert f[(20,)] == 1
        assert all(mult >= 0 for _, mult in f.items())

    def test_under_cap_allowed(self):
        assert oracle_plethysm_s2((9,), max_weight=None).degree == 18

    def test_tight_cap_rejects(self):
        with pytest.raises(ResourceBoundError):
            oracle_plethysm_s2((3, 1), max_weight=3)
