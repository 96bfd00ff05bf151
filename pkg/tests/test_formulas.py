"""Closed decomposition formulas and the classification table.

Cross-checks against the brute-force oracle live in the acceptance
suite; this file covers frozen small outputs, shape preconditions,
internal consistency between formula variants, and the table
statistics on hand-checked rows.
"""

import pytest

from foulkes.errors import InvalidShapeError
from foulkes.expansions import SchurExpansion, total_dimension
from foulkes.formulas import (
    TABLE_NU_KINDS,
    induce_product,
    omega_dual,
    phi_hook,
    phi_hook_depth1_closed,
    phi_one_column,
    phi_one_row,
    phi_two_column,
    phi_two_one_column_closed,
    phi_two_row,
    table_multiplicity,
    table_row_class,
)
from foulkes.lr import schur_multiply
from foulkes.partitions import (
    conjugate,
    double,
    double_hook,
    generate_distinct_partitions,
    generate_partitions,
)


class TestBaseCases:
    def test_one_row_small(self):
        assert dict(phi_one_row(0).items()) == {(): 1}
        assert dict(phi_one_row(1).items()) == {(2,): 1}
        assert dict(phi_one_row(2).items()) == {(4,): 1, (2, 2): 1}
        assert dict(phi_one_row(3).items()) == {(6,): 1, (4, 2): 1, (2, 2, 2): 1}

    def test_one_column_small(self):
        assert dict(phi_one_column(0).items()) == {(): 1}
        assert dict(phi_one_column(1).items()) == {(2,): 1}
        assert dict(phi_one_column(2).items()) == {(3, 1): 1}
        assert dict(phi_one_column(3).items()) == {(4, 1, 1): 1, (3, 3): 1}

    @pytest.mark.parametrize("n", range(0, 9))
    def test_one_row_is_doubled_partitions(self, n):
        f = phi_one_row(n)
        assert set(f.support()) == {double(a) for a in generate_partitions(n)}
        assert all(m == 1 for _, m in f.items())

    @pytest.mark.parametrize("n", range(0, 9))
    def test_one_column_is_double_hooks(self, n):
        f = phi_one_column(n)
        assert set(f.support()) == {
            double_hook(a) for a in generate_distinct_partitions(n)
        }
        assert all(m == 1 for _, m in f.items())

    def test_negative_rejected(self):
        with pytest.raises(InvalidShapeError):
            phi_one_row(-1)
        with pytest.raises(InvalidShapeError):
            phi_one_column(-2)


class TestTwoRow:
    def test_frozen_examples(self):
        assert dict(phi_two_row(2, 1).items()) == {(3, 1): 1}
        assert dict(phi_two_row(3, 1).items()) == {
            (5, 1): 1,
            (4, 2): 1,
            (3, 2, 1): 1,
        }

    def test_r_zero_degenerates(self):
        for n in range(1, 7):
            assert phi_two_row(n, 0) == phi_one_row(n)

    def test_shape_validation(self):
        with pytest.raises(InvalidShapeError):
            phi_two_row(3, 2)  # (1, 2) is not weakly decreasing
        with pytest.raises(InvalidShapeError):
            phi_two_row(2, -1)
        with pytest.raises(InvalidShapeError):
            phi_two_row(-1, 0)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_nonnegative(self, n):
        for r in range(0, n // 2 + 1):
            assert all(m > 0 for _, m in phi_two_row(n, r).items())


class TestTwoColumn:
    def test_frozen_example(self):
        assert dict(phi_two_column(4, 1).items()) == {
            (6, 1, 1): 1,
            (5, 3): 1,
            (5, 2, 1): 1,
            (4, 3, 1): 1,
            (4, 2, 1, 1): 1,
            (3, 3, 2): 1,
        }
        assert total_dimension(phi_two_column(4, 1)) == 315

    def test_r_zero_degenerates(self):
        for n in range(1, 7):
            assert phi_two_column(n, 0) == phi_one_column(n)

    def test_shape_validation(self):
        with pytest.raises(InvalidShapeError):
            phi_two_column(3, 2)  # needs 2r <= n
        with pytest.raises(InvalidShapeError):
            phi_two_column(2, -1)

    @pytest.mark.parametrize("n", range(1, 8))
    def test_conjugate_of_two_row_labels(self, n):
        # nu = (2^r, 1^(n-2r)) is the conjugate of (n-r, r); the expansions
        # differ, but both must live in degree 2n with positive terms.
        for r in range(0, n // 2 + 1):
            f = phi_two_column(n, r)
            assert f.degree == 2 * n
            assert all(m > 0 for _, m in f.items())


class TestHook:
    def test_variants_agree(self):
        for n in range(1, 8):
            for r in range(0, n):
                assert phi_hook(n, r, "first") == phi_hook(n, r, "second"), (n, r)

    def test_degenerate_ends(self):
        for n in range(1, 8):
            assert phi_hook(n, 0, "first") == phi_one_row(n)
            assert phi_hook(n, n - 1, "first") == phi_one_column(n)

    def test_shape_validation(self):
        with pytest.raises(InvalidShapeError):
            phi_hook(3, 3, "first")
        with pytest.raises(InvalidShapeError):
            phi_hook(3, -1, "first")
        with pytest.raises(ValueError):
            phi_hook(3, 1, "third")

    def test_zero_size(self):
        with pytest.raises(InvalidShapeError):
            phi_hook(0, 0, "first")


class TestClosedCorollaries:
    def test_depth_one_frozen(self):
        assert dict(phi_hook_depth1_closed(4).items()) == {
            (7, 1): 1,
            (6, 2): 1,
            (5, 3): 1,
            (5, 2, 1): 1,
            (4, 3, 1): 1,
            (4, 2, 2): 1,
            (3, 2, 2, 1): 1,
        }
        assert total_dimension(phi_hook_depth1_closed(4)) == 315

    @pytest.mark.parametrize("n", range(2, 9))
    def test_depth_one_matches_two_row(self, n):
        assert phi_hook_depth1_closed(n) == phi_two_row(n, 1)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_single_double_column_matches(self, n):
        assert phi_two_one_column_closed(n) == phi_two_column(n, 1)

    def test_small_shapes_rejected(self):
        with pytest.raises(InvalidShapeError):
            phi_hook_depth1_closed(1)
        with pytest.raises(InvalidShapeError):
            phi_two_one_column_closed(1)


class TestTable:
    def test_kinds_constant(self):
        assert TABLE_NU_KINDS == ("n-2,1,1", "n-2,2")

    def test_row_class_examples(self):
        assert table_row_class((6, 4, 2)) == "all-even"
        assert table_row_class((5, 3)) == "2-odd-distinct"
        assert table_row_class((3, 3, 2)) == "2-odd-equal"
        assert table_row_class((7, 5, 3, 1)) == "4-odd-distinct"
        assert table_row_class((5, 3, 3, 1)) == "4-odd-one-pair"
        assert table_row_class((3, 3, 1, 1)) == "4-odd-two-pairs"
        assert table_row_class((5, 1, 1, 1, 1, 1)) == "other"

    def test_frozen_multiplicities(self):
        assert table_multiplicity((5, 3), "n-2,1,1", 4) == 1
        assert table_multiplicity((6, 1, 1), "n-2,1,1", 4) == 1
        assert table_multiplicity((5, 3), "n-2,2", 4) == 0
        assert table_multiplicity((7, 1), "n-2,1,1", 4) == 0
        assert table_multiplicity((4, 4), "n-2,1,1", 4) == 0
        assert table_multiplicity((8,), "n-2,1,1", 4) == 0

    def test_hand_checked_n4_hook_rows(self):
        # The six constituents of the n=4, nu=(2,1,1) decomposition, each
        # with multiplicity one; every other partition of 8 gives zero.
        expected = {
            (6, 1, 1): 1,
            (5, 3): 1,
            (5, 2, 1): 1,
            (4, 3, 1): 1,
            (4, 2, 1, 1): 1,
            (3, 3, 2): 1,
        }
        for lam in generate_partitions(8):
            assert table_multiplicity(lam, "n-2,1,1", 4) == expected.get(lam, 0)

    def test_validation(self):
        with pytest.raises(ValueError):
            table_multiplicity((4, 2), "bogus", 3)
        with pytest.raises(InvalidShapeError):
            table_multiplicity((2, 2), "n-2,1,1", 2)
        with pytest.raises(InvalidShapeError):
            table_multiplicity((4, 2), "n-2,2", 3)
        with pytest.raises(InvalidShapeError):
            table_multiplicity((4, 2), "n-2,1,1", 4)  # size 6, needs 8


class TestDualAndProduct:
    def test_omega_dual_base(self):
        assert dict(omega_dual(phi_one_row(2)).items()) == {
            (2, 2): 1,
            (1, 1, 1, 1): 1,
        }

    @pytest.mark.parametrize("n", range(0, 7))
    def test_omega_dual_conjugates_labels(self, n):
        f = phi_one_row(n)
        g = omega_dual(f)
        assert {conjugate(lam) for lam in f.support()} == set(g.support())

    def test_induce_product_matches_schur_multiply(self):
        f = SchurExpansion({(2,): 1, (1, 1): 1})
        g = SchurExpansion({(2, 1): 1})
        assert induce_product(f, g) == schur_multiply(f, g)
