import json
import math

import numpy as np
import pytest
import sympy

from lahnet.config import settings
from lahnet.lah import lah_matrix
from lahnet.linalg import (
    ExactMatrix,
    IndexSet,
    all_index_sets,
    binomial,
    determinant,
    determinant_laplace,
    factorial,
    first_difference,
    format_matrix_text,
    matrix_from_csv,
    matrix_from_json,
    matrix_to_csv,
    matrix_to_json,
    minor_value,
    parse_matrix,
    rising_product,
    submatrix,
)
from lahnet.utils.errors import DimensionError, GuardError, IndexSetError, ParameterError


def _random_matrix(rng, size, low, high):
    return ExactMatrix.from_rows(
        [[int(v) for v in row] for row in rng.integers(low, high, size=(size, size), endpoint=True)]
    )


# ===== INDEX SETS =====
class TestIndexSet:
    def test_parse(self):
        assert IndexSet.parse("2,3").indices == (2, 3)
        assert IndexSet.parse(" 1, 4 ").indices == (1, 4)
        assert str(IndexSet.of(1, 3)) == "{1,3}"

    @pytest.mark.parametrize("indices", [(2, 2), (3, 1), (0, 1), (-1,)])
    def test_rejects_non_increasing_or_non_positive(self, indices):
        with pytest.raises(IndexSetError):
            IndexSet(indices)

    def test_empty_needs_flag(self):
        with pytest.raises(IndexSetError):
            IndexSet(())
        assert len(IndexSet.empty()) == 0

    def test_parse_garbage(self):
        with pytest.raises(IndexSetError):
            IndexSet.parse("1,x")

    def test_all_index_sets_lexicographic(self):
        assert [s.indices for s in all_index_sets(4, 2)] == [
            (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)
        ]


# ===== MATRICES =====
class TestExactMatrix:
    def test_one_based_access(self):
        M = ExactMatrix.from_rows([[1, 2], [3, 4]])
        assert M[1, 1] == 1
        assert M[2, 1] == 3
        with pytest.raises(DimensionError):
            M[3, 1]
        with pytest.raises(DimensionError):
            M[1, 0]

    def test_entry_count_checked(self):
        with pytest.raises(DimensionError):
            ExactMatrix(2, 2, (1, 2, 3))

    @pytest.mark.parametrize("bad", [1.0, True, "1"])
    def test_only_exact_integers(self, bad):
        with pytest.raises(DimensionError):
            ExactMatrix(1, 1, (bad,))

    def test_ragged_rows(self):
        with pytest.raises(DimensionError):
            ExactMatrix.from_rows([[1, 2], [3]])

    def test_zero_dimension_only_as_empty(self):
        with pytest.raises(DimensionError):
            ExactMatrix(0, 2, ())
        assert ExactMatrix.empty().rows == 0

    def test_arithmetic(self):
        A = ExactMatrix.from_rows([[1, 2], [3, 4]])
        B = ExactMatrix.from_rows([[0, 1], [1, 0]])
        assert (A @ B).to_rows() == [[2, 1], [4, 3]]
        assert A.transpose().to_rows() == [[1, 3], [2, 4]]
        assert A.matvec([1, -1]) == [-1, -1]
        assert A.with_entry(2, 2, 9).to_rows() == [[1, 2], [3, 9]]
        assert A.to_rows() == [[1, 2], [3, 4]]
        with pytest.raises(DimensionError):
            A.matvec([1, 2, 3])

    def test_lower_triangular(self, lm3):
        assert lm3.is_lower_triangular()
        assert not lm3.transpose().is_lower_triangular()

    def test_first_difference(self, lm3):
        assert first_difference(lm3, lm3) is None
        assert first_difference(lm3, lm3.with_entry(3, 2, 7)) == (3, 2, 6, 7)


# ===== SUBMATRICES AND MINORS =====
class TestSubmatrix:
    def test_identity_selection(self):
        assert submatrix(ExactMatrix.identity(3), [1, 3], [1, 3]) == ExactMatrix.identity(2)

    def test_lah_block(self, lm3):
        assert submatrix(lm3, IndexSet.of(2, 3), IndexSet.of(1, 2)).to_rows() == [[2, 1], [6, 6]]

    def test_single_entry(self):
        M = ExactMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]])
        assert submatrix(M, [2], [3]).to_rows() == [[6]]

    def test_full_selection_is_identity_map(self, lm3):
        assert submatrix(lm3, IndexSet.full(3), IndexSet.full(3)) == lm3

    def test_size_mismatch(self, lm3):
        with pytest.raises(DimensionError):
            submatrix(lm3, [1, 2], [1])

    def test_out_of_range_names_index(self, lm3):
        with pytest.raises(DimensionError) as excinfo:
            submatrix(lm3, [1, 4], [1, 2])
        assert excinfo.value.details["index"] == 4
        assert excinfo.value.details["bound"] == 3


class TestDeterminant:
    def test_small_cases(self):
        assert determinant(ExactMatrix.identity(5)) == 1
        assert determinant(ExactMatrix.from_rows([[1, 2], [3, 4]])) == -2
        assert determinant(ExactMatrix.empty()) == 1

    def test_needs_row_swap(self, swap_matrix):
        assert determinant(swap_matrix) == -1
        assert determinant(ExactMatrix.from_rows([[0, 0], [0, 1]])) == 0
        assert determinant(ExactMatrix.from_rows([[0, 2, 1], [0, 0, 3], [4, 0, 0]])) == 24

    def test_lah_matrix_is_unimodular(self):
        assert determinant(lah_matrix(4).matrix) == 1

    def test_non_square(self):
        with pytest.raises(DimensionError):
            determinant(ExactMatrix.from_rows([[1, 2, 3]]))

    def test_agrees_with_laplace_on_small_matrices(self):
        rng = np.random.default_rng(2024)
        for _ in range(500):
            M = _random_matrix(rng, 3, -3, 3)
            assert determinant(M) == determinant_laplace(M)

    def test_agrees_with_sympy_on_big_entries(self):
        rng = np.random.default_rng(7)
        for size in (4, 6, 8):
            M = _random_matrix(rng, size, -10**6, 10**6)
            assert determinant(M) == int(sympy.Matrix(M.to_rows()).det())

    def test_triangular_is_product_of_diagonal(self):
        rng = np.random.default_rng(11)
        for size in range(1, 7):
            rows = [
                [int(rng.integers(-9, 10)) if j <= i else 0 for j in range(size)]
                for i in range(size)
            ]
            M = ExactMatrix.from_rows(rows)
            assert determinant(M) == math.prod(M.diagonal())

    def test_laplace_guard(self):
        M = ExactMatrix.identity(settings.LAPLACE_MAX_DIMENSION + 1)
        with pytest.raises(GuardError) as excinfo:
            determinant_laplace(M)
        assert excinfo.value.guard == "LAPLACE_MAX_DIMENSION"
        assert determinant_laplace(M, force=True) == 1


class TestMinorValue:
    def test_lah_minor(self, lm3):
        assert minor_value(lm3, IndexSet.of(2, 3), IndexSet.of(1, 2)) == 6

    def test_single_entry_minors(self, lm3):
        for i in range(1, 4):
            for j in range(1, 4):
                assert minor_value(lm3, [i], [j]) == lm3[i, j]

    def test_full_minor_of_lm5(self):
        assert minor_value(lah_matrix(5).matrix, IndexSet.full(5), IndexSet.full(5)) == 1

    def test_empty_minor_is_one(self, lm3):
        assert minor_value(lm3, IndexSet.empty(), IndexSet.empty()) == 1


# ===== INTEGERS =====
class TestIntegers:
    def test_values(self):
        assert binomial(4, 2) == 6
        assert binomial(3, 5) == 0
        assert factorial(0) == 1
        assert factorial(20) == 2432902008176640000
        assert factorial(20) > 2**61

    def test_pascal_rule(self):
        for n in range(1, 31):
            for k in range(1, n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)

    def test_rising_product(self):
        assert rising_product(3, 5) == 20
        assert rising_product(5, 5) == 1
        assert rising_product(0, 6) == 720

    @pytest.mark.parametrize("args", [(-1, 0), (2, -1)])
    def test_negative_rejected(self, args):
        with pytest.raises(ParameterError):
            binomial(*args)


# ===== SERIALIZATION =====
class TestSerialization:
    def test_json_uses_decimal_strings(self):
        M = ExactMatrix.from_rows([[factorial(25), -1]])
        document = json.loads(matrix_to_json(M))
        assert document == [["15511210043330985984000000", "-1"]]
        assert matrix_from_json(matrix_to_json(M)) == M

    def test_csv(self, lm3):
        text = matrix_to_csv(lm3)
        assert text == "1,0,0\n2,1,0\n6,6,1\n"
        assert matrix_from_csv(text) == lm3

    def test_parse_matrix(self, swap_matrix):
        assert parse_matrix("0,1;1,0") == swap_matrix
        assert parse_matrix("5") == ExactMatrix.from_rows([[5]])

    @pytest.mark.parametrize("text", ["", "1,2;3", "1,a;2,3", "1.5"])
    def test_parse_matrix_errors(self, text):
        with pytest.raises(DimensionError):
            parse_matrix(text)

    @pytest.mark.parametrize("text", ['[["1", "x"]]', "[[1.5, 2]]", "[[true]]", "[[null]]"])
    def test_bad_json(self, text):
        with pytest.raises(DimensionError):
            matrix_from_json(text)

    def test_json_accepts_plain_integers(self):
        assert matrix_from_json('[[1, "2"], [3, 4]]').to_rows() == [[1, 2], [3, 4]]

    def test_text_alignment(self):
        lines = format_matrix_text(lah_matrix(4).matrix).splitlines()
        assert lines[0] == " 1  0  0 0"
        assert lines[3] == "24 36 12 1"
