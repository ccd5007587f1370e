"""Entry annotations of multi-filtered data and their restriction to a path.

Points carry antichains of minimal time grades at which they appear.  Given a
semimetric ``H`` on the points, the Vietoris-Rips complex of the time-filtered
data is filtered over ``T x h(S)``, and :func:`build_pathwise_edges` computes,
for a path ``((t_1, r_1) <= ... <= (t_m, r_m))``, the first step at which each
pair becomes an edge.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import DimensionMismatch, ValidationError
from .poset import Antichain, Path, minimal_elements
from .semimetric import SemimetricMatrix, unrank_pairs

Pair = Tuple[int, int]


def normalize_pair(u: int, v: int) -> Pair:
    u, v = int(u), int(v)
    if u == v:
        raise ValidationError(f"self-loop ({u},{v}) is not an edge")
    if u < 0 or v < 0:
        raise ValidationError(f"negative vertex index in ({u},{v})")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class PointAnnotations:
    """Minimal entry grades ``K(x)`` over the time poset for points ``0..N-1``."""

    entries: Tuple[Antichain, ...]

    def __post_init__(self):
        if not self.entries:
            raise ValidationError("no points annotated")
        dims = {a.dimension for a in self.entries}
        if 0 in dims:
            raise ValidationError("every point needs a non-empty entry annotation")
        if len(dims) != 1:
            raise DimensionMismatch(f"point annotations mix time dimensions {sorted(dims)}")

    @classmethod
    def from_grades(cls, grades: Sequence[Iterable[Sequence[float]]]) -> "PointAnnotations":
        return cls(tuple(minimal_elements(g) for g in grades))

    @property
    def dimension(self) -> int:
        return self.entries[0].dimension

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Antichain:
        return self.entries[i]


class EdgeAnnotations(Mapping):
    """Sparse map ``{(u, v): Antichain}`` with ``u < v``; absent pairs are never edges."""

    def __init__(self, items: Mapping[Pair, Antichain] | Iterable[Tuple[Pair, Antichain]] = ()):
        data: Dict[Pair, Antichain] = {}
        pairs = items.items() if isinstance(items, Mapping) else items
        dims = set()
        for (u, v), grades in pairs:
            key = normalize_pair(u, v)
            if not isinstance(grades, Antichain):
                grades = minimal_elements(grades)
            if len(grades) == 0:
                raise ValidationError(f"edge {key} has an empty annotation")
            dims.add(grades.dimension)
            data[key] = grades
        if len(dims) > 1:
            raise DimensionMismatch(f"edge annotations mix dimensions {sorted(dims)}")
        self._data = dict(sorted(data.items()))
        self.dimension = dims.pop() if dims else None

    def __getitem__(self, key: Pair) -> Antichain:
        return self._data[normalize_pair(*key)]

    def __iter__(self) -> Iterator[Pair]:
        return iter(self._data)

    def __len__(self) -> int:
        return len(self._data)

    def __repr__(self) -> str:
        return f"EdgeAnnotations({len(self)} edges, dimension={self.dimension})"

    def n_vertices(self) -> int:
        return max((v for _, v in self._data), default=-1) + 1


def edge_annotations_from_complex(edges: Iterable[Tuple[Sequence[int], Iterable[Sequence[float]]]]) -> EdgeAnnotations:
    """Minimal entry grades for explicitly listed edges.

    Each item is ``((u, v), grades)``.  A pair listed twice has its grade lists
    merged before taking minima.
    """
    merged: Dict[Pair, list] = {}
    for pair, grades in edges:
        if len(pair) != 2:
            raise ValidationError(f"an edge needs two endpoints, got {pair}")
        key = normalize_pair(*pair)
        grades = list(grades)
        if not grades:
            raise ValidationError(f"edge {key} has an empty grade list")
        merged.setdefault(key, []).extend(grades)
    return EdgeAnnotations({k: minimal_elements(g) for k, g in merged.items()})


class PathwiseEdgeList:
    """Pairs that become edges along a path, with their 1-based entry step.

    Stored as parallel arrays sorted by ``(lo, hi)``.
    """

    __slots__ = ("lo", "hi", "step", "n_steps")

    def __init__(self, lo, hi, step, n_steps: int):
        lo = np.asarray(lo, dtype=np.int64)
        hi = np.asarray(hi, dtype=np.int64)
        step = np.asarray(step, dtype=np.int64)
        if not (lo.shape == hi.shape == step.shape):
            raise ValidationError("ragged pathwise edge arrays")
        if np.any(lo >= hi):
            raise ValidationError("pathwise edges must be stored with lo < hi")
        if step.size and (step.min() < 1 or step.max() > n_steps):
            raise ValidationError("entry step outside the path")
        order = np.lexsort((hi, lo))
        self.lo, self.hi, self.step = lo[order], hi[order], step[order]
        self.n_steps = n_steps

    @classmethod
    def from_dict(cls, steps: Mapping[Pair, int], n_steps: int) -> "PathwiseEdgeList":
        keys = [normalize_pair(*p) for p in steps]
        return cls([k[0] for k in keys], [k[1] for k in keys], list(steps.values()), n_steps)

    def as_dict(self) -> Dict[Pair, int]:
        return {(int(a), int(b)): int(k) for a, b, k in zip(self.lo, self.hi, self.step)}

    def __len__(self) -> int:
        return int(self.lo.size)

    def __eq__(self, other) -> bool:
        return (isinstance(other, PathwiseEdgeList) and self.n_steps == other.n_steps
                and np.array_equal(self.lo, other.lo) and np.array_equal(self.hi, other.hi)
                and np.array_equal(self.step, other.step))


def _time_dimension_check(k_dim: int, path: Path) -> None:
    if path.dimension < k_dim:
        raise DimensionMismatch(
            f"path grades have {path.dimension} coordinates, annotations need {k_dim} time coordinates")


def point_entry(k_x: Antichain | Iterable[Sequence[float]], path: Path) -> Optional[int]:
    """First path step whose time part dominates an element of ``k_x``; None if never.

    The time part of a step is its first ``n`` coordinates, ``n`` being the
    dimension of the annotation.
    """
    if not isinstance(k_x, Antichain):
        k_x = minimal_elements(k_x)
    n = k_x.dimension
    _time_dimension_check(n, path)
    for k, step in enumerate(path.steps, start=1):
        t = step[:n]
        if any(all(a <= b for a, b in zip(u, t)) for u in k_x):
            return k
    return None


def _chunks(n: int, parts: int):
    bounds = np.linspace(0, n, max(1, parts) + 1).astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def build_pathwise_edges(h: SemimetricMatrix, k: PointAnnotations, path: Path, *,
                         threads: int = 1) -> PathwiseEdgeList:
    """Entry step of every pair of points along ``path``.

    ``path`` lives in ``T x R``: the leading coordinates are time, the last one
    is the scale.  Pair ``{i, j}`` enters at the first step ``k`` at which both
    points exist and ``h[i, j] <= r_k``.  Pairs that never enter are omitted.
    """
    if len(k) != h.size:
        raise ValidationError(f"{h.size} points in the matrix but {len(k)} annotated")
    n_time = k.dimension
    if path.dimension != n_time + 1:
        raise DimensionMismatch(
            f"path grades need {n_time} time coordinates plus one scale, got {path.dimension}")
    if np.any(h.values < 0) or np.any(np.isnan(h.values)):
        raise ValidationError("negative or undefined distance in the input matrix")
    m = len(path)
    missing = m + 1
    entry = np.array([point_entry(a, path) or missing for a in k.entries], dtype=np.int64)
    scales = np.array([s[-1] for s in path.steps])

    def work(span):
        start, stop = span
        idx = np.arange(start, stop, dtype=np.int64)
        vals = h.values[start:stop]
        hi, lo = unrank_pairs(idx)
        both = np.maximum(entry[hi], entry[lo])
        # scales are nondecreasing along a monotone path
        by_scale = np.searchsorted(scales, vals, side="left") + 1
        step = np.maximum(both, by_scale)
        keep = step <= m
        return lo[keep], hi[keep], step[keep]

    spans = _chunks(h.values.size, max(1, threads) * 4)
    if threads > 1 and len(spans) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(work, spans))
    else:
        parts = [work(s) for s in spans]
    if not parts:
        return PathwiseEdgeList([], [], [], m)
    lo, hi, step = (np.concatenate(p) for p in zip(*parts))
    return PathwiseEdgeList(lo, hi, step, m)
