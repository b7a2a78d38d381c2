import json

import pytest
import sympy

from lahnet.lah import (
    IntPolynomial,
    falling_factorial,
    lah_expansion,
    rising_factorial,
    verify_polynomial_identity,
)
from lahnet.utils.errors import ParameterError

x = sympy.Symbol("x")


def _sympy_coefficients(expr, degree):
    poly = sympy.Poly(sympy.expand(expr), x)
    return [int(poly.coeff_monomial(x**d)) for d in range(degree + 1)]


class TestIntPolynomial:
    def test_trailing_zeros_stripped(self):
        assert IntPolynomial((1, 2, 0, 0)).coefficients == (1, 2)
        assert IntPolynomial((0, 0)).degree == -1

    def test_arithmetic(self):
        p = IntPolynomial.linear(1)
        q = IntPolynomial.linear(-1)
        assert (p * q).coefficients == (-1, 0, 1)
        assert (p + q).coefficients == (0, 2)
        assert (3 * p).coefficients == (3, 3)
        assert (p * IntPolynomial()).degree == -1

    def test_evaluate(self):
        assert rising_factorial(3).evaluate(2) == 24
        assert falling_factorial(3).evaluate(2) == 0
        assert IntPolynomial().evaluate(5) == 0

    def test_str(self):
        assert str(rising_factorial(1)) == "x"
        assert str(rising_factorial(2)) == "x^2 + x"
        assert str(falling_factorial(2)) == "x^2 - x"
        assert str(IntPolynomial((-1, 0, 1))) == "x^2 - 1"
        assert str(IntPolynomial((0, -2))) == "-2x"
        assert str(IntPolynomial()) == "0"


class TestFactorials:
    def test_empty_products(self):
        assert rising_factorial(0).coefficients == (1,)
        assert falling_factorial(0).coefficients == (1,)

    @pytest.mark.parametrize("build", [rising_factorial, falling_factorial])
    def test_negative_degree_rejected(self, build):
        with pytest.raises(ParameterError):
            build(-2)

    def test_against_sympy(self):
        for n in range(0, 10):
            assert list(rising_factorial(n).coefficients) == _sympy_coefficients(sympy.rf(x, n), n)
            assert list(falling_factorial(n).coefficients) == _sympy_coefficients(sympy.ff(x, n), n)


class TestIdentity:
    def test_degree_three_expansion(self):
        assert lah_expansion(3).coefficients == (0, 2, 3, 1)

    @pytest.mark.parametrize("n", range(0, 13))
    def test_holds(self, n):
        report = verify_polynomial_identity(n)
        assert report.holds
        assert report.points_agree
        assert report.first_difference is None
        assert report.lhs == report.rhs

    def test_reports_first_difference(self, monkeypatch):
        monkeypatch.setattr(
            "lahnet.lah.polynomial.lah_recurrence_table", lambda n: [[1], [0, 1], [0, 2, 2]]
        )
        report = verify_polynomial_identity(2)
        assert not report.holds
        assert not report.points_agree
        assert report.first_difference.degree == 1
        assert (report.first_difference.lhs, report.first_difference.rhs) == (1, 0)

    def test_json_uses_strings(self):
        document = json.loads(verify_polynomial_identity(3).to_json())
        assert document["lhs"] == ["0", "2", "3", "1"]
        assert document["holds"] is True
