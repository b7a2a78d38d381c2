"""
Weak sign variation and sampled checks of the variation-decreasing property.

Var-(u) counts the sign changes of u once its zero entries are deleted.
A matrix M is variation-decreasing when Var-(Mx) <= Var-(x) for every
nonzero x; totally non-negative matrices are. Sampling integer vectors can
falsify the property, never prove it.
"""
import logging
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from lahnet.linalg.matrix import ExactMatrix
from lahnet.tnn.models import VariationReport, VariationViolation
from lahnet.utils.constants import GENERATOR_NAME, MAX_ENTRY_BOUND
from lahnet.utils.errors import DimensionError, ParameterError

logger = logging.getLogger(__name__)


def weak_variation(u: Sequence[int]) -> int:
    """Sign changes of u after deleting zeros; 0 for the zero vector."""
    if len(u) == 0:
        raise DimensionError("weak variation of an empty vector is undefined")
    nonzero = [v for v in u if v != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if (a < 0) != (b < 0))


def _draw_vector(rng: np.random.Generator, length: int, bound: int) -> List[int]:
    """Uniform nonzero integer vector in [-bound, bound]^length; zero draws are rejected."""
    while True:
        x = [int(v) for v in rng.integers(-bound, bound, size=length, endpoint=True)]
        if any(x):
            return x


def check_variation_decreasing(
    M: ExactMatrix, samples: int, seed: int, entry_bound: int
) -> VariationReport:
    """Record every sampled x with Var-(Mx) > Var-(x).

    Samples come from numpy's PCG64 generator seeded with `seed`, so equal
    seeds give equal samples.
    """
    if isinstance(samples, bool) or not isinstance(samples, int) or samples < 1:
        raise ParameterError(f"samples must be a positive integer, got {samples!r}")
    if isinstance(entry_bound, bool) or not isinstance(entry_bound, int) or not 1 <= entry_bound <= MAX_ENTRY_BOUND:
        raise ParameterError(f"entry_bound must be an integer in 1..{MAX_ENTRY_BOUND}, got {entry_bound!r}")
    if isinstance(seed, bool) or not isinstance(seed, int) or not 0 <= seed < 2**64:
        raise ParameterError(f"seed must be an unsigned 64-bit integer, got {seed!r}")

    rng = np.random.Generator(np.random.PCG64(seed))
    violations: List[VariationViolation] = []
    max_drop: Optional[int] = None
    for _ in range(samples):
        x = _draw_vector(rng, M.cols, entry_bound)
        mx = M.matvec(x)
        var_x, var_mx = weak_variation(x), weak_variation(mx)
        drop = var_x - var_mx
        max_drop = drop if max_drop is None else max(max_drop, drop)
        if var_mx > var_x:
            violations.append(VariationViolation(x=x, mx=mx, var_x=var_x, var_mx=var_mx))

    if violations:
        logger.warning(
            f"{len(violations)} of {samples} samples increase the sign variation",
            extra={"seed": seed},
        )
    return VariationReport(
        rows=M.rows,
        cols=M.cols,
        sample_count=samples,
        seed=seed,
        generator=GENERATOR_NAME,
        entry_bound=entry_bound,
        violations=violations,
        max_drop=max_drop,
    )


def find_variation_counterexample(
    dimension: int = 2,
    entries: Sequence[int] = (-1, 0, 1),
    vector_entries: Sequence[int] = (-1, 0, 1),
) -> Optional[Tuple[ExactMatrix, List[int]]]:
    """First (M, x) in lexicographic order with Var-(Mx) > Var-(x), or None."""
    vectors = [list(x) for x in product(vector_entries, repeat=dimension) if any(x)]
    for flat in product(entries, repeat=dimension * dimension):
        M = ExactMatrix(dimension, dimension, flat)
        for x in vectors:
            if weak_variation(M.matvec(x)) > weak_variation(x):
                return M, x
    return None
