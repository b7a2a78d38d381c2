"""
Dense exact integer matrices and 1-based index sets.

Every public index in this package is 1-based: row i of an ExactMatrix is
`M[i, j]` with 1 <= i <= M.rows, and an IndexSet lists such positions.
"""
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from lahnet.utils.errors import DimensionError, IndexSetError


def _check_integer(value: object, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DimensionError(f"{where} is not an exact integer: {value!r}", value=repr(value))
    return value


@dataclass(frozen=True)
class IndexSet:
    """Strictly increasing list of 1-based positions."""

    indices: Tuple[int, ...]
    allow_empty: bool = False

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices and not self.allow_empty:
            raise IndexSetError("index set is empty")
        for position, index in enumerate(self.indices):
            if isinstance(index, bool) or not isinstance(index, int) or index < 1:
                raise IndexSetError(f"index {index!r} is not a positive integer", index=repr(index))
            if position and index <= self.indices[position - 1]:
                raise IndexSetError(
                    f"indices are not strictly increasing at {index}",
                    indices=list(self.indices),
                )

    @classmethod
    def of(cls, *indices: int) -> "IndexSet":
        return cls(tuple(indices))

    @classmethod
    def empty(cls) -> "IndexSet":
        return cls((), allow_empty=True)

    @classmethod
    def full(cls, size: int) -> "IndexSet":
        """{1, ..., size}."""
        return cls(tuple(range(1, size + 1)), allow_empty=size == 0)

    @classmethod
    def parse(cls, text: str) -> "IndexSet":
        """Parse a comma-separated list such as "2,3"."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        try:
            return cls(tuple(int(p) for p in parts))
        except ValueError as e:
            if isinstance(e, IndexSetError):
                raise
            raise IndexSetError(f"cannot parse index set {text!r}", text=text) from e

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.indices) + "}"

    @property
    def last(self) -> int:
        return self.indices[-1] if self.indices else 0


IndexLike = Union[IndexSet, Sequence[int]]


def as_index_set(value: IndexLike) -> IndexSet:
    if isinstance(value, IndexSet):
        return value
    return IndexSet(tuple(value), allow_empty=len(value) == 0)


def all_index_sets(m: int, size: int) -> Iterator[IndexSet]:
    """All size-element subsets of {1..m}, in lexicographic order."""
    for combo in combinations(range(1, m + 1), size):
        yield IndexSet(combo)


@dataclass(frozen=True)
class ExactMatrix:
    """Row-major matrix of arbitrary-precision integers.

    Dimensions are positive, with one exception: the 0x0 matrix produced by
    selecting empty index sets, whose determinant is 1.
    """

    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        empty = self.rows == 0 and self.cols == 0
        if not empty and (self.rows < 1 or self.cols < 1):
            raise DimensionError(
                f"matrix dimensions must be positive, got {self.rows}x{self.cols}",
                rows=self.rows,
                cols=self.cols,
            )
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}",
                rows=self.rows,
                cols=self.cols,
                entries=len(self.entries),
            )
        for position, value in enumerate(self.entries):
            _check_integer(value, f"entry {position // self.cols + 1},{position % self.cols + 1}")

    # ===== CONSTRUCTION =====
    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls.empty()
        width = len(rows[0])
        for i, row in enumerate(rows, start=1):
            if len(row) != width:
                raise DimensionError(
                    f"row {i} has {len(row)} entries, expected {width}",
                    row=i,
                    expected=width,
                    actual=len(row),
                )
        return cls(len(rows), width, tuple(v for row in rows for v in row))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def empty(cls) -> "ExactMatrix":
        return cls(0, 0, ())

    # ===== ACCESS =====
    def __getitem__(self, position: Tuple[int, int]) -> int:
        i, j = position
        self._check_position(i, j)
        return self.entries[(i - 1) * self.cols + (j - 1)]

    def _check_position(self, i: int, j: int) -> None:
        if not 1 <= i <= self.rows:
            raise DimensionError(f"row index {i} outside 1..{self.rows}", index=i, bound=self.rows)
        if not 1 <= j <= self.cols:
            raise DimensionError(f"column index {j} outside 1..{self.cols}", index=j, bound=self.cols)

    def row(self, i: int) -> List[int]:
        self._check_position(i, 1)
        start = (i - 1) * self.cols
        return list(self.entries[start:start + self.cols])

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[r * self.cols:(r + 1) * self.cols]) for r in range(self.rows)]

    def diagonal(self) -> List[int]:
        return [self[i, i] for i in range(1, min(self.rows, self.cols) + 1)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_lower_triangular(self) -> bool:
        return all(
            self[i, j] == 0
            for i in range(1, self.rows + 1)
            for j in range(i + 1, self.cols + 1)
        )

    # ===== ARITHMETIC =====
    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_rows([list(col) for col in zip(*self.to_rows())])

    def matvec(self, x: Sequence[int]) -> List[int]:
        if len(x) != self.cols:
            raise DimensionError(
                f"vector of length {len(x)} does not match {self.cols} columns",
                expected=self.cols,
                actual=len(x),
            )
        return [sum(a * b for a, b in zip(row, x)) for row in self.to_rows()]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}",
                left=[self.rows, self.cols],
                right=[other.rows, other.cols],
            )
        columns = other.transpose().to_rows()
        return ExactMatrix.from_rows(
            [[sum(a * b for a, b in zip(row, col)) for col in columns] for row in self.to_rows()]
        )

    def with_entry(self, i: int, j: int, value: int) -> "ExactMatrix":
        """Copy of the matrix with entry (i, j) replaced."""
        self._check_position(i, j)
        entries = list(self.entries)
        entries[(i - 1) * self.cols + (j - 1)] = _check_integer(value, f"entry {i},{j}")
        return ExactMatrix(self.rows, self.cols, tuple(entries))


def submatrix(M: ExactMatrix, I: IndexLike, J: IndexLike) -> ExactMatrix:
    """Rows I and columns J of M, in index order."""
    I, J = as_index_set(I), as_index_set(J)
    if len(I) != len(J):
        raise DimensionError(
            f"row set {I} and column set {J} differ in size",
            rows=list(I),
            cols=list(J),
        )
    if I.last > M.rows:
        raise DimensionError(f"row index {I.last} exceeds {M.rows} rows", index=I.last, bound=M.rows)
    if J.last > M.cols:
        raise DimensionError(
            f"column index {J.last} exceeds {M.cols} columns", index=J.last, bound=M.cols
        )
    if not len(I):
        return ExactMatrix.empty()
    return ExactMatrix.from_rows([[M[i, j] for j in J] for i in I])


def first_difference(expected: ExactMatrix, actual: ExactMatrix) -> Optional[Tuple[int, int, int, int]]:
    """(i, j, expected, actual) at the first differing cell in row-major order, or None."""
    if (expected.rows, expected.cols) != (actual.rows, actual.cols):
        raise DimensionError(
            f"cannot compare {expected.rows}x{expected.cols} with {actual.rows}x{actual.cols}",
            expected=[expected.rows, expected.cols],
            actual=[actual.rows, actual.cols],
        )
    for position, (a, b) in enumerate(zip(expected.entries, actual.entries)):
        if a != b:
            return position // expected.cols + 1, position % expected.cols + 1, a, b
    return None
