"""The Vietoris-Rips transformation of a path through a multi-filtered flag complex.

Each pair of vertices is sent to the index of the first path step at which it
is an edge, or ``inf`` if it never is.  The Vietoris-Rips filtration of the
resulting semimetric at scale ``k`` has exactly the edges, hence (flag
property) exactly the simplices of dimension >= 1, of the ``k``-th complex on
the path.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import List, Tuple

import numpy as np

from .errors import ValidationError
from .multifiltration import EdgeAnnotations, PathwiseEdgeList
from .poset import Path, first_reachable_step
from .semimetric import SemimetricMatrix, check_semimetric, condensed_index

__all__ = ["transform", "check_semimetric", "SemimetricMatrix"]


def _from_annotations(annotations: EdgeAnnotations, path: Path, n: int, threads: int) -> SemimetricMatrix:
    if annotations.dimension is not None and annotations.dimension != path.dimension:
        raise ValidationError(
            f"edge grades have {annotations.dimension} coordinates, path has {path.dimension}")
    items = list(annotations.items())
    for (u, v), _ in items:
        if v >= n:
            raise ValidationError(f"edge ({u},{v}) out of range for {n} vertices")

    def work(chunk: List[Tuple]) -> List[Tuple[int, int]]:
        out = []
        for (u, v), grades in chunk:
            k = first_reachable_step(grades, path)
            if k is not None:
                out.append((condensed_index(u, v), k))
        return out

    size = max(1, len(items) // max(1, threads * 4))
    chunks = [items[i:i + size] for i in range(0, len(items), size)]
    if threads > 1 and len(chunks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(work, chunks))
    else:
        results = [work(c) for c in chunks]
    values = np.full(n * (n - 1) // 2, np.inf)
    for part in results:
        for idx, k in part:
            values[idx] = k
    return SemimetricMatrix(n, values)


def transform(annotations: EdgeAnnotations | PathwiseEdgeList, path: Path, n: int, *,
              threads: int = 1) -> SemimetricMatrix:
    """Distance matrix of the Vietoris-Rips transformation along ``path``.

    ``annotations`` is either an edge annotation list over the full poset or an
    already restricted :class:`PathwiseEdgeList`.  Entries lie in
    ``{1..len(path)} | {inf}``; pairs that are never edges get ``inf``.
    """
    if n < 1:
        raise ValidationError("need at least one vertex")
    if isinstance(annotations, PathwiseEdgeList):
        if annotations.n_steps != len(path):
            raise ValidationError(
                f"edge list was built for {annotations.n_steps} steps, path has {len(path)}")
        if len(annotations) and annotations.hi.max() >= n:
            raise ValidationError(f"edge index out of range for {n} vertices")
        values = np.full(n * (n - 1) // 2, np.inf)
        hi, lo = annotations.hi, annotations.lo
        values[hi * (hi - 1) // 2 + lo] = annotations.step
        return SemimetricMatrix(n, values)
    return _from_annotations(annotations, path, n, threads)
