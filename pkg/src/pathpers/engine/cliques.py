"""Clique enumeration for the flag (Vietoris-Rips) filtration of a semimetric.

A simplex enters at its diameter, the largest pairwise distance among its
vertices (0 for a vertex).  Pairs at distance ``inf`` or above the threshold
are not edges, so no simplex ever contains them.
"""
from __future__ import annotations

import math
from typing import Dict, Iterator, List, NamedTuple, Tuple

from ..errors import ResourceLimitError, ValidationError
from ..semimetric import SemimetricMatrix

DEFAULT_MAX_SIMPLICES = 10 ** 8


class FiltrationSimplex(NamedTuple):
    value: float
    vertices: Tuple[int, ...]

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1


def filtration_key(s: FiltrationSimplex):
    return (s.value, len(s.vertices), s.vertices)


def neighbourhoods(d: SemimetricMatrix, threshold: float) -> List[Dict[int, float]]:
    """``up[u][v] = d(u, v)`` for every edge with ``u < v`` and value <= threshold."""
    up: List[Dict[int, float]] = [dict() for _ in range(d.size)]
    lo, hi, vals = d.pairs_at_most(threshold)
    for u, v, x in zip(lo.tolist(), hi.tolist(), vals.tolist()):
        up[u][v] = x
    return up


def cliques_by_dimension(d: SemimetricMatrix, max_dim: int, threshold: float = math.inf,
                         max_simplices: int = DEFAULT_MAX_SIMPLICES) -> List[List[FiltrationSimplex]]:
    """All cliques of dimension ``0..max_dim``, one list per dimension, each in filtration order."""
    if max_dim < 0:
        raise ValidationError("max_dim must be non-negative")
    n = d.size
    out: List[List[FiltrationSimplex]] = [[] for _ in range(max_dim + 1)]
    if n > max_simplices:
        raise ResourceLimitError(f"{n} vertices exceed the simplex cap of {max_simplices}")
    out[0] = [FiltrationSimplex(0.0, (u,)) for u in range(n)]
    count = n
    if max_dim == 0:
        return out
    up = neighbourhoods(d, threshold)

    for u in range(n):
        # stack entries: (vertices, value, candidate extensions above the last vertex)
        stack = [((u,), 0.0, sorted(up[u]))]
        while stack:
            verts, value, cand = stack.pop()
            dim = len(verts)
            for idx, w in enumerate(cand):
                w_value = value
                for x in verts:
                    dx = up[x][w]
                    if dx > w_value:
                        w_value = dx
                simplex = verts + (w,)
                out[dim].append(FiltrationSimplex(w_value, simplex))
                count += 1
                if count > max_simplices:
                    raise ResourceLimitError(
                        f"flag filtration exceeds the simplex cap of {max_simplices}; "
                        "lower the threshold or max_dim")
                if dim < max_dim:
                    nbrs = up[w]
                    rest = [y for y in cand[idx + 1:] if y in nbrs]
                    if rest:
                        stack.append((simplex, w_value, rest))
    for simplices in out:
        simplices.sort(key=filtration_key)
    return out


def enumerate_cliques(d: SemimetricMatrix, max_dim: int, threshold: float = math.inf,
                      max_simplices: int = DEFAULT_MAX_SIMPLICES) -> Iterator[FiltrationSimplex]:
    """Every clique with at most ``max_dim + 1`` vertices and diameter <= threshold.

    Yields in filtration order: by value, then dimension, then vertices.
    """
    layers = cliques_by_dimension(d, max_dim, threshold, max_simplices)
    merged = [s for layer in layers for s in layer]
    merged.sort(key=filtration_key)
    return iter(merged)
