"""JSON and CSV forms of ExactMatrix; every entry is written as a decimal string."""
import csv
import io
import json
from typing import List

from lahnet.linalg.matrix import ExactMatrix
from lahnet.utils.errors import DimensionError


def matrix_to_rows_of_strings(M: ExactMatrix) -> List[List[str]]:
    return [[str(v) for v in row] for row in M.to_rows()]


def matrix_to_json(M: ExactMatrix, indent: int = 2) -> str:
    return json.dumps(matrix_to_rows_of_strings(M), indent=indent)


def _json_entry(value: object) -> int:
    """Decimal string or JSON integer; floats and booleans are not exact entries."""
    if isinstance(value, str):
        return int(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return value
    raise DimensionError(f"matrix entry {value!r} is not an exact integer", value=repr(value))


def matrix_from_json(text: str) -> ExactMatrix:
    try:
        rows = json.loads(text)
        return ExactMatrix.from_rows([[_json_entry(v) for v in row] for row in rows])
    except (TypeError, ValueError) as e:
        if isinstance(e, DimensionError):
            raise
        raise DimensionError(f"not a JSON matrix of decimal strings: {e}") from e


def matrix_to_csv(M: ExactMatrix) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(matrix_to_rows_of_strings(M))
    return buffer.getvalue()


def matrix_from_csv(text: str) -> ExactMatrix:
    rows = [row for row in csv.reader(io.StringIO(text)) if row]
    try:
        return ExactMatrix.from_rows([[int(v) for v in row] for row in rows])
    except ValueError as e:
        if isinstance(e, DimensionError):
            raise
        raise DimensionError(f"not a CSV matrix of integers: {e}") from e


def parse_matrix(text: str) -> ExactMatrix:
    """Parse the compact command-line form "r1;r2;..." with comma-separated entries."""
    rows = [r for r in text.split(";") if r.strip()]
    if not rows:
        raise DimensionError(f"empty matrix literal {text!r}")
    try:
        return ExactMatrix.from_rows([[int(v) for v in row.split(",")] for row in rows])
    except ValueError as e:
        if isinstance(e, DimensionError):
            raise
        raise DimensionError(f"cannot parse matrix literal {text!r}", text=text) from e


def format_matrix_text(M: ExactMatrix) -> str:
    """Right-aligned columns separated by one space."""
    rows = matrix_to_rows_of_strings(M)
    widths = [max(len(row[j]) for row in rows) for j in range(M.cols)]
    return "\n".join(
        " ".join(value.rjust(width) for value, width in zip(row, widths)) for row in rows
    )
