"""
Lah numbers L(n, k) by three independent routes.

- recurrence: L(n+1, k) = L(n, k-1) + (n+k) L(n, k), seeded with L(0, 0) = 1
- closed form: L(m, k) = C(m-1, k-1) * m!/k!
- enumeration: partitions of {1..n} into k nonempty linearly ordered blocks

Boundary convention shared by all three: L(n, 0) = 0 for n >= 1 and
L(0, k) = 0 for k >= 1.
"""
import logging
import math
from itertools import permutations
from typing import Iterator, List, Tuple

from lahnet.config import guard_lifted, settings
from lahnet.linalg.integers import binomial, rising_product
from lahnet.utils.errors import GuardError, ParameterError

logger = logging.getLogger(__name__)

LahTable = List[List[int]]


def _require_count(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 0:
        raise ParameterError(f"{name} must be a non-negative integer, got {value!r}")


# ===== RECURRENCE =====
def lah_recurrence_table(n_max: int) -> LahTable:
    """Triangle table[n][k] = L(n, k) for 0 <= k <= n <= n_max."""
    _require_count("n_max", n_max)
    table: LahTable = [[1]]
    for n in range(n_max):
        previous = table[n]
        row = []
        for k in range(n + 2):
            left = previous[k - 1] if 1 <= k <= n + 1 else 0
            here = previous[k] if k <= n else 0
            row.append(left + (n + k) * here)
        table.append(row)
    return table


def lah_row_sums(n_max: int) -> List[int]:
    """Row sums of the triangle, one per n in 0..n_max."""
    return [sum(row) for row in lah_recurrence_table(n_max)]


# ===== CLOSED FORM =====
def lah_closed_form(m: int, k: int) -> int:
    """C(m-1, k-1) * m!/k!, with m!/k! taken as the product (k+1)...m.

    Zero for k > m and on the boundary (exactly one of m, k zero);
    L(0, 0) = 1.
    """
    _require_count("m", m)
    _require_count("k", k)
    if m == 0 or k == 0:
        return int(m == k)
    if k > m:
        return 0
    return binomial(m - 1, k - 1) * rising_product(k, m)


# ===== ENUMERATION ORACLE =====
def _set_partitions(n: int, k: int) -> Iterator[List[Tuple[int, ...]]]:
    """Partitions of {1..n} into exactly k unlabeled blocks, by restricted growth."""
    blocks: List[List[int]] = []

    def place(element: int) -> Iterator[List[Tuple[int, ...]]]:
        if element > n:
            if len(blocks) == k:
                yield [tuple(b) for b in blocks]
            return
        # not enough elements left to open the missing blocks
        if len(blocks) + (n - element + 1) < k:
            return
        for block in blocks:
            block.append(element)
            yield from place(element + 1)
            block.pop()
        if len(blocks) < k:
            blocks.append([element])
            yield from place(element + 1)
            blocks.pop()

    yield from place(1)


def check_enumeration_guard(n: int, force: bool) -> None:
    limit = settings.ENUMERATION_MAX_N
    if n > limit and not guard_lifted(force):
        logger.warning(f"enumeration of n={n} refused", extra={"guard": "ENUMERATION_MAX_N", "limit": limit})
        raise GuardError(
            f"exhaustive enumeration is capped at n={limit}; use lah_closed_form for n={n}",
            guard="ENUMERATION_MAX_N",
            limit=limit,
            estimate=n,
        )


def lah_enumerate(n: int, k: int, force: bool = False) -> int:
    """Count ordered set partitions of {1..n} into k blocks exhaustively."""
    _require_count("n", n)
    _require_count("k", k)
    check_enumeration_guard(n, force)
    if k > n:
        return 0
    total = 0
    for partition in _set_partitions(n, k):
        orders = 1
        for block in partition:
            orders *= math.factorial(len(block))
        total += orders
    return total


def ordered_set_partitions(n: int, k: int, force: bool = False) -> Iterator[Tuple[Tuple[int, ...], ...]]:
    """Every partition of {1..n} into k tuples, each tuple in every one of its orders."""
    _require_count("n", n)
    _require_count("k", k)
    check_enumeration_guard(n, force)

    def orderings(partition, position):
        if position == len(partition):
            yield ()
            return
        for head in permutations(partition[position]):
            for rest in orderings(partition, position + 1):
                yield (head,) + rest

    for partition in _set_partitions(n, k):
        yield from orderings(partition, 0)
