"""Exception hierarchy.

Validation problems derive from ``ValueError`` so plain callers can catch them
without importing this module; the CLI maps each family to an exit code.
"""


class PathPersError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(PathPersError):
    """Malformed input file or text."""


class ValidationError(PathPersError, ValueError):
    """Well-formed input that violates a precondition."""


class DimensionMismatch(ValidationError):
    pass


class NonMonotonePath(ValidationError):
    def __init__(self, index: int):
        # 1-based positions of the offending consecutive steps
        self.pair = (index, index + 1)
        super().__init__(f"path is not monotone at steps {index} -> {index + 1}")


class IncomparablePair(ValidationError):
    def __init__(self, v, w):
        self.v, self.w = v, w
        super().__init__(f"grades {v} and {w} are not comparable (need v <= w)")


class SemimetricViolation(ValidationError):
    def __init__(self, pairs):
        self.pairs = list(pairs)
        shown = ", ".join(f"({i},{j})" for i, j in self.pairs[:5])
        more = "" if len(self.pairs) <= 5 else f" and {len(self.pairs) - 5} more"
        super().__init__(f"not a semimetric: invalid distance at {shown}{more}")


class ResourceLimitError(PathPersError):
    """Raised when a computation would exceed a configured simplex budget."""
