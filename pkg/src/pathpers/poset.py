"""Grades in R^n under the componentwise order, monotone paths and antichains.

A grade is a plain tuple of floats.  Nothing here does arithmetic on grades,
only comparisons, so parsed values are compared exactly.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

from .errors import DimensionMismatch, NonMonotonePath, ValidationError

Grade = Tuple[float, ...]


def as_grade(values: Iterable[float]) -> Grade:
    grade = tuple(float(v) for v in values)
    if not grade:
        raise ValidationError("a grade needs at least one coordinate")
    if not all(math.isfinite(c) for c in grade):
        raise ValidationError(f"grade {grade} has a non-finite coordinate")
    return grade


def leq(a: Sequence[float], b: Sequence[float]) -> bool:
    """Componentwise order: ``a <= b`` iff ``a[i] <= b[i]`` for every i."""
    if len(a) != len(b):
        raise DimensionMismatch(f"cannot compare grades of length {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def _check_uniform(grades: Sequence[Grade]) -> int:
    n = len(grades[0])
    for g in grades:
        if len(g) != n:
            raise DimensionMismatch(f"mixed grade lengths {n} and {len(g)}")
    return n


@dataclass(frozen=True)
class Antichain:
    """Pairwise incomparable grades, kept in lexicographic order."""

    elements: Tuple[Grade, ...]

    def __post_init__(self):
        if self.elements:
            _check_uniform(self.elements)
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements))))
        for i, a in enumerate(self.elements):
            for b in self.elements[i + 1:]:
                if leq(a, b) or leq(b, a):
                    raise ValidationError(f"{a} and {b} are comparable; not an antichain")

    @property
    def dimension(self) -> int:
        return len(self.elements[0]) if self.elements else 0

    def __iter__(self) -> Iterator[Grade]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)


def minimal_elements(grades: Iterable[Sequence[float]]) -> Antichain:
    """The elements of ``grades`` not strictly dominated by another element."""
    points = sorted({as_grade(g) for g in grades})
    if not points:
        raise ValidationError("minimal_elements of an empty set")
    _check_uniform(points)
    # In lexicographic order a dominating element never precedes what it dominates,
    # so comparing against the minima found so far is enough.
    minima: list[Grade] = []
    for p in points:
        if not any(leq(q, p) for q in minima):
            minima.append(p)
    return Antichain(tuple(minima))


@dataclass(frozen=True)
class Path:
    """A monotone sequence of grades; the last step repeats forever."""

    steps: Tuple[Grade, ...]

    def __post_init__(self):
        steps = tuple(as_grade(s) for s in self.steps)
        if not steps:
            raise ValidationError("a path needs at least one step")
        _check_uniform(steps)
        for k in range(len(steps) - 1):
            if not leq(steps[k], steps[k + 1]):
                raise NonMonotonePath(k + 1)
        object.__setattr__(self, "steps", steps)

    @property
    def dimension(self) -> int:
        return len(self.steps[0])

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Grade]:
        return iter(self.steps)

    def __getitem__(self, k: int) -> Grade:
        return self.steps[k]


def validate_path(raw: Sequence[Sequence[float]]) -> Path:
    """Build a :class:`Path`, raising :class:`NonMonotonePath` on the first bad pair."""
    return Path(tuple(raw))


def first_reachable_step(q: Iterable[Sequence[float]], path: Path) -> Optional[int]:
    """Smallest 1-based step k such that some element of ``q`` is <= ``path[k]``.

    Returns None when the upper set of ``q`` never meets the path.  Monotonicity
    of the path makes the reachable steps a suffix, so the first hit is the
    minimum of the intersection.
    """
    q = list(q)
    for k, step in enumerate(path.steps, start=1):
        for g in q:
            if leq(g, step):
                return k
    return None
