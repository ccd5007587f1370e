"""Finite semimetric spaces stored as condensed lower-triangular distance arrays.

Entry ``(i, j)`` with ``i > j`` lives at ``i * (i - 1) // 2 + j``, the same
row-major order as the lower-distance text format::

    d10
    d20,d21
    d30,d31,d32

``inf`` is a valid distance.  The triangle inequality is never assumed.
"""
from __future__ import annotations

import math
from typing import Iterable, List, Tuple

import numpy as np

from .errors import ParseError, ValidationError


def condensed_index(i: int, j: int) -> int:
    if i < j:
        i, j = j, i
    if i == j:
        raise ValidationError("the diagonal is not stored")
    return i * (i - 1) // 2 + j


def unrank_pairs(idx: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Inverse of :func:`condensed_index` for an array of positions: ``(i, j)`` with ``i > j``."""
    idx = np.asarray(idx, dtype=np.int64)
    hi = ((1 + np.sqrt(1 + 8 * idx.astype(np.float64))) // 2).astype(np.int64)
    # float sqrt can be off by one for large indices
    hi -= (hi * (hi - 1) // 2 > idx)
    hi += ((hi + 1) * hi // 2 <= idx)
    return hi, idx - hi * (hi - 1) // 2


class SemimetricMatrix:
    """Symmetric distances over ``size`` points with an implicit zero diagonal."""

    __slots__ = ("size", "values")

    def __init__(self, size: int, values=None):
        if size < 1:
            raise ValidationError("a semimetric space needs at least one point")
        n_pairs = size * (size - 1) // 2
        if values is None:
            values = np.full(n_pairs, np.inf)
        values = np.array(values, dtype=np.float64).reshape(-1)
        if values.shape[0] != n_pairs:
            raise ValidationError(f"{size} points need {n_pairs} distances, got {values.shape[0]}")
        values.setflags(write=False)
        self.size = size
        self.values = values

    @classmethod
    def from_dense(cls, dense) -> "SemimetricMatrix":
        dense = np.asarray(dense, dtype=np.float64)
        if dense.ndim != 2 or dense.shape[0] != dense.shape[1]:
            raise ValidationError("expected a square matrix")
        n = dense.shape[0]
        rows, cols = np.tril_indices(n, k=-1)
        if not np.array_equal(dense[rows, cols], dense[cols, rows]):
            raise ValidationError("distance matrix is not symmetric")
        return cls(n, dense[rows, cols])

    @classmethod
    def from_pairs(cls, size: int, pairs) -> "SemimetricMatrix":
        """Build from a mapping ``{(i, j): d}``; unlisted pairs are at distance ``inf``."""
        values = np.full(size * (size - 1) // 2, np.inf)
        for (i, j), d in dict(pairs).items():
            if not (0 <= i < size and 0 <= j < size):
                raise ValidationError(f"pair ({i},{j}) out of range for {size} points")
            values[condensed_index(i, j)] = d
        return cls(size, values)

    def __getitem__(self, ij: Tuple[int, int]) -> float:
        i, j = ij
        if i == j:
            return 0.0
        return float(self.values[condensed_index(i, j)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, SemimetricMatrix) and self.size == other.size
                and np.array_equal(self.values, other.values))

    def __repr__(self) -> str:
        return f"SemimetricMatrix(size={self.size})"

    def to_dense(self) -> np.ndarray:
        dense = np.zeros((self.size, self.size))
        rows, cols = np.tril_indices(self.size, k=-1)
        dense[rows, cols] = self.values
        dense[cols, rows] = self.values
        return dense

    def pairs_at_most(self, threshold: float = math.inf):
        """Arrays ``(lo, hi, value)`` of all finite distances ``<= threshold``, ``lo < hi``."""
        idx = np.flatnonzero(np.isfinite(self.values) & (self.values <= threshold))
        hi, lo = unrank_pairs(idx)
        return lo, hi, self.values[idx]


def check_semimetric(d: SemimetricMatrix) -> List[Tuple[int, int]]:
    """Pairs ``(i, j)``, ``i > j``, whose distance is not in ``(0, inf]``.

    An empty list means ``d`` is a valid semimetric.
    """
    bad = np.flatnonzero(~(d.values > 0))  # catches 0, negatives and NaN
    hi, lo = unrank_pairs(bad)
    return list(zip(hi.tolist(), lo.tolist()))


def format_value(value: float) -> str:
    if math.isinf(value) and value > 0:
        return "inf"
    if float(value).is_integer():
        return str(int(value))
    return repr(float(value))


def format_lower_distance(d: SemimetricMatrix) -> str:
    lines = []
    for i in range(1, d.size):
        start = i * (i - 1) // 2
        lines.append(",".join(format_value(v) for v in d.values[start:start + i]))
    return "".join(line + "\n" for line in lines)


def parse_lower_distance(text: str) -> SemimetricMatrix:
    """Parse the lower-distance text format.  An empty text is a single point."""
    rows = [line.strip() for line in text.splitlines()]
    while rows and not rows[-1]:
        rows.pop()
    values: list[float] = []
    for i, row in enumerate(rows, start=1):
        tokens = [t.strip() for t in row.split(",")] if row else []
        if len(tokens) != i:
            raise ParseError(f"line {i}: expected {i} distances, found {len(tokens)}")
        for tok in tokens:
            if tok.lower() in ("nan", "-inf", "+nan"):
                raise ParseError(f"line {i}: invalid distance {tok!r}")
            try:
                values.append(float(tok))
            except ValueError:
                raise ParseError(f"line {i}: invalid distance {tok!r}") from None
    return SemimetricMatrix(len(rows) + 1, values)


def iter_rows(d: SemimetricMatrix) -> Iterable[np.ndarray]:
    for i in range(1, d.size):
        start = i * (i - 1) // 2
        yield d.values[start:start + i]
