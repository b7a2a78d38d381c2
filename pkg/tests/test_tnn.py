import json

import pytest
from pydantic import ValidationError

from lahnet.lah import lah_matrix, pascal_matrix
from lahnet.linalg import ExactMatrix, minor_value
from lahnet.network import unit_network, weight_matrix
from lahnet.tnn import (
    MinorWitness,
    SignMode,
    TnnReport,
    is_totally_nonnegative,
    is_totally_positive,
    iter_minors,
    minor_count,
)
from lahnet.utils.errors import DimensionError, GuardError


def test_minor_count():
    assert minor_count(1) == 1
    assert minor_count(2) == 5
    assert minor_count(7) == 3431
    assert len(list(iter_minors(lah_matrix(4).matrix))) == minor_count(4)


class TestTotalNonnegativity:
    @pytest.mark.parametrize("m", range(1, 8))
    def test_lah_matrix(self, m):
        report = is_totally_nonnegative(lah_matrix(m).matrix)
        assert report.is_tnn
        assert report.witness is None
        assert report.checked_minor_count == minor_count(m)

    @pytest.mark.parametrize("m", range(1, 8))
    def test_binomial_matrix(self, m):
        assert is_totally_nonnegative(weight_matrix(unit_network(m))).is_tnn

    def test_identity(self):
        assert is_totally_nonnegative(ExactMatrix.identity(5)).is_tnn

    def test_swap_matrix(self, swap_matrix):
        report = is_totally_nonnegative(swap_matrix)
        assert not report.is_tnn
        assert report.checked_minor_count == 5
        assert (report.witness.I, report.witness.J, report.witness.value) == ([1, 2], [1, 2], -1)

    def test_witness_is_reproducible(self):
        M = ExactMatrix.from_rows([[1, 2, 3], [1, 1, 1], [0, 1, 2]])
        report = is_totally_nonnegative(M)
        assert not report.is_tnn
        w = report.witness
        assert w.value < 0
        assert minor_value(M, w.I, w.J) == w.value

    def test_first_negative_entry_found_first(self):
        M = ExactMatrix.from_rows([[1, 1], [-1, 5]])
        report = is_totally_nonnegative(M)
        assert report.checked_minor_count == 3
        assert (report.witness.I, report.witness.J) == ([2], [1])

    def test_non_square(self):
        with pytest.raises(DimensionError):
            is_totally_nonnegative(ExactMatrix.from_rows([[1, 2, 3]]))

    def test_dimension_guard(self):
        M = ExactMatrix.identity(4)
        with pytest.raises(GuardError) as excinfo:
            is_totally_nonnegative(M, max_dimension=3)
        assert excinfo.value.guard == "TNN_MAX_DIMENSION"
        assert excinfo.value.estimate == 69
        assert is_totally_nonnegative(M, force=True, max_dimension=3).is_tnn

    def test_json(self, swap_matrix):
        document = json.loads(is_totally_nonnegative(swap_matrix).to_json())
        assert document["mode"] == "nonnegative"
        assert document["witness"] == {"I": [1, 2], "J": [1, 2], "value": "-1"}


class TestTotalPositivity:
    def test_lah_matrix_is_not_totally_positive(self, lm3):
        report = is_totally_positive(lm3)
        assert report.mode == SignMode.POSITIVE
        assert not report.is_tnn
        assert report.checked_minor_count == 2
        assert (report.witness.I, report.witness.J, report.witness.value) == ([1], [2], 0)

    def test_positive_matrix(self):
        report = is_totally_positive(ExactMatrix.from_rows([[2, 1], [1, 2]]))
        assert report.is_tnn
        assert report.checked_minor_count == 5

    def test_pascal_matrix_is_only_nonnegative(self):
        P = pascal_matrix(4)
        assert is_totally_nonnegative(P).is_tnn
        assert not is_totally_positive(P).is_tnn


def test_report_requires_witness_exactly_on_failure():
    witness = MinorWitness(I=[1], J=[1], value=-1)
    with pytest.raises(ValidationError):
        TnnReport(rows=1, cols=1, checked_minor_count=1, is_tnn=True, witness=witness)
    with pytest.raises(ValidationError):
        TnnReport(rows=1, cols=1, checked_minor_count=1, is_tnn=False)
