from typing import Any, Dict


def _jsonable(value: Any) -> Any:
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return value if isinstance(value, (str, float)) else str(value)


class LahnetError(Exception):
    """Base error; `details` carries the structured context of the failure."""

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        return {
            "error": type(self).__name__,
            "message": self.message,
            "details": _jsonable(self.details),
        }


class DimensionError(LahnetError, ValueError):
    """Shape mismatch, non-square input or an index outside the matrix."""


class IndexSetError(LahnetError, ValueError):
    """Index list that is not a strictly increasing list of positive positions."""


class ParameterError(LahnetError, ValueError):
    """Count, seed or bound outside its admissible range."""


class NetworkError(LahnetError, ValueError):
    """Malformed network or a path that does not follow its edges."""


class GuardError(LahnetError):
    """A configured guard refused the computation."""

    def __init__(self, message: str, guard: str, limit: int, estimate: int, **details: Any):
        super().__init__(message, guard=guard, limit=limit, estimate=estimate, **details)
        self.guard = guard
        self.limit = limit
        self.estimate = estimate


class InvariantViolation(LahnetError, AssertionError):
    """Two independent computations disagreed; this is a bug, not bad input."""
