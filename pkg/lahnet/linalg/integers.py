import math

from lahnet.utils.errors import ParameterError


def _require_nonnegative(**values: int) -> None:
    for name, value in values.items():
        if isinstance(value, bool) or not isinstance(value, int) or value < 0:
            raise ParameterError(
                f"{name} must be a non-negative integer, got {value!r}", **{name: repr(value)}
            )


def binomial(n: int, k: int) -> int:
    """C(n, k); zero when k > n."""
    _require_nonnegative(n=n, k=k)
    return math.comb(n, k)


def factorial(n: int) -> int:
    _require_nonnegative(n=n)
    return math.factorial(n)


def rising_product(low: int, high: int) -> int:
    """(low+1)(low+2)...high, i.e. high!/low! without a division; 1 when high <= low."""
    _require_nonnegative(low=low, high=high)
    return math.prod(range(low + 1, high + 1))
