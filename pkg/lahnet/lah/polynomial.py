import logging
from dataclasses import dataclass
from typing import Tuple, Union

from lahnet.lah.models import CoefficientDifference, IdentityReport
from lahnet.lah.numbers import lah_recurrence_table
from lahnet.utils.errors import ParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in x with exact integer coefficients; coefficients[d] multiplies x^d."""

    coefficients: Tuple[int, ...] = ()

    def __post_init__(self):
        coefficients = list(self.coefficients)
        while coefficients and coefficients[-1] == 0:
            coefficients.pop()
        object.__setattr__(self, "coefficients", tuple(coefficients))

    @classmethod
    def constant(cls, value: int) -> "IntPolynomial":
        return cls((value,))

    @classmethod
    def linear(cls, constant: int, slope: int = 1) -> "IntPolynomial":
        """slope * x + constant."""
        return cls((constant, slope))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def coefficient(self, d: int) -> int:
        return self.coefficients[d] if 0 <= d < len(self.coefficients) else 0

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coefficients), len(other.coefficients))
        return IntPolynomial(tuple(self.coefficient(d) + other.coefficient(d) for d in range(size)))

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(tuple(c * other for c in self.coefficients))
        if not self.coefficients or not other.coefficients:
            return IntPolynomial()
        product = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            for j, b in enumerate(other.coefficients):
                product[i + j] += a * b
        return IntPolynomial(tuple(product))

    __rmul__ = __mul__

    def evaluate(self, x: int) -> int:
        value = 0
        for c in reversed(self.coefficients):
            value = value * x + c
        return value

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        terms = []
        for d in range(self.degree, -1, -1):
            c = self.coefficients[d]
            if c == 0:
                continue
            magnitude = abs(c)
            power = "" if d == 0 else ("x" if d == 1 else f"x^{d}")
            body = str(magnitude) if d == 0 or magnitude != 1 else ""
            body = f"{body}{power}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def _require_degree(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")


def rising_factorial(n: int) -> IntPolynomial:
    """x(x+1)...(x+n-1); the constant 1 for n = 0."""
    _require_degree("n", n)
    result = IntPolynomial.constant(1)
    for i in range(n):
        result = result * IntPolynomial.linear(i)
    return result


def falling_factorial(k: int) -> IntPolynomial:
    """x(x-1)...(x-k+1); the constant 1 for k = 0."""
    _require_degree("k", k)
    result = IntPolynomial.constant(1)
    for i in range(k):
        result = result * IntPolynomial.linear(-i)
    return result


def lah_expansion(n: int) -> IntPolynomial:
    """Sum over k = 0..n of L(n, k) times the falling factorial of degree k."""
    row = lah_recurrence_table(n)[n]
    total = IntPolynomial()
    for k, lah in enumerate(row):
        total = total + falling_factorial(k) * lah
    return total


def verify_polynomial_identity(n: int) -> IdentityReport:
    """Compare the rising factorial of degree n with its Lah expansion coefficient by coefficient."""
    lhs = rising_factorial(n)
    rhs = lah_expansion(n)

    first_difference = None
    for d in range(max(len(lhs.coefficients), len(rhs.coefficients))):
        if lhs.coefficient(d) != rhs.coefficient(d):
            first_difference = CoefficientDifference(
                degree=d, lhs=lhs.coefficient(d), rhs=rhs.coefficient(d)
            )
            break

    # secondary check only; the coefficient comparison decides
    points_agree = all(lhs.evaluate(x) == rhs.evaluate(x) for x in range(n + 2))

    holds = first_difference is None
    if not holds:
        logger.warning(f"polynomial identity fails at n={n}", extra={"degree": first_difference.degree})
    return IdentityReport(
        n=n,
        holds=holds,
        lhs=list(lhs.coefficients),
        rhs=list(rhs.coefficients),
        first_difference=first_difference,
        points_agree=points_agree,
    )
