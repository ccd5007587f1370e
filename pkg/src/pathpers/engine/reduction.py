"""Vietoris-Rips persistence of a finite semimetric space over F2.

Degree 0 is read off a union-find pass over the edges.  Higher degrees come
from column reduction of the boundary matrices, processed from the top
dimension down so that columns known to be positive are cleared before they
are touched.  Simplices are ordered by (value, dimension, vertices).

Representative 1-cycles are the reduced boundary column that kills a class, or
for an essential class the creating edge closed up through the spanning
forest.  Both are then exhaustively reduced against the boundaries present at
the bar's birth (see :func:`tighten_representative`).
"""
from __future__ import annotations

import math
from collections import deque
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from ..errors import SemimetricViolation, ValidationError
from ..semimetric import SemimetricMatrix, check_semimetric
from .barcode import Bar, Barcode, Edge
from .cliques import DEFAULT_MAX_SIMPLICES, cliques_by_dimension
from .unionfind import UnionFind

MAX_TIGHTEN_PASSES = 100


class FlagFiltration:
    """Simplices of the flag filtration, indexed per dimension by filtration rank."""

    def __init__(self, d: SemimetricMatrix, max_dim: int, threshold: float = math.inf,
                 max_simplices: int = DEFAULT_MAX_SIMPLICES):
        self.d = d
        self.threshold = threshold
        layers = cliques_by_dimension(d, max_dim, threshold, max_simplices)
        self.vertices: List[List[Tuple[int, ...]]] = [[s.vertices for s in layer] for layer in layers]
        self.values: List[List[float]] = [[s.value for s in layer] for layer in layers]
        self.rank: List[Dict[Tuple[int, ...], int]] = [
            {v: i for i, v in enumerate(layer)} for layer in self.vertices]

    @property
    def max_dim(self) -> int:
        return len(self.vertices) - 1

    def boundary(self, dim: int, col: int) -> Set[int]:
        verts = self.vertices[dim][col]
        rank = self.rank[dim - 1]
        return {rank[verts[:i] + verts[i + 1:]] for i in range(len(verts))}

    def reduce(self, dim: int, cleared: Set[int] = frozenset()):
        """Reduce the boundary matrix of ``dim``-simplices.

        Returns ``(pivot_of, columns, zero)``: ``pivot_of[row] = col`` for every
        pivot, ``columns[col]`` the reduced column of each pivot column, and the
        set of columns that reduced to zero (cleared columns included).
        """
        pivot_of: Dict[int, int] = {}
        columns: Dict[int, Set[int]] = {}
        zero: Set[int] = set(cleared)
        for col in range(len(self.vertices[dim])):
            if col in cleared:
                continue
            work = self.boundary(dim, col)
            while work:
                low = max(work)
                other = pivot_of.get(low)
                if other is None:
                    pivot_of[low] = col
                    columns[col] = work
                    break
                work ^= columns[other]
            else:
                zero.add(col)
        return pivot_of, columns, zero


def exhaust_cycle(cycle: Iterable[int], birth: float, pivot_of: Dict[int, int],
                  columns: Dict[int, Set[int]], column_values: Sequence[float]) -> Set[int]:
    """Eliminate every edge of ``cycle`` that is the pivot of a boundary born by ``birth``.

    Works top-down in filtration order; each step removes the current edge and
    only introduces earlier ones, so the loop terminates.
    """
    z = set(cycle)
    for _ in range(MAX_TIGHTEN_PASSES):
        changed = False
        for e in sorted(z, reverse=True):
            if e not in z:
                continue
            col = pivot_of.get(e)
            if col is not None and column_values[col] <= birth:
                z ^= columns[col]
                changed = True
        if not changed:
            break
    return z


def _forest_path(adjacency: List[List[int]], u: int, v: int) -> List[Edge]:
    prev = {u: None}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        if x == v:
            break
        for y in adjacency[x]:
            if y not in prev:
                prev[y] = x
                queue.append(y)
    path = []
    x = v
    while prev[x] is not None:
        p = prev[x]
        path.append((min(p, x), max(p, x)))
        x = p
    return path


def _edges_of(filt: FlagFiltration, ranks: Iterable[int]) -> Tuple[Edge, ...]:
    return tuple(sorted(filt.vertices[1][r] for r in ranks))


def vr_barcode(d: SemimetricMatrix, max_dim: int = 1, threshold: float = math.inf,
               with_reps: bool = False, max_simplices: int = DEFAULT_MAX_SIMPLICES) -> Barcode:
    """Persistence barcode of the Vietoris-Rips filtration of ``d`` in degrees ``0..max_dim``.

    Only simplices with diameter <= ``threshold`` are built; classes alive at
    the threshold are reported with death ``inf``.  Zero-length bars are
    dropped.  With ``with_reps`` every degree-1 bar carries a representative
    cycle as a sorted tuple of edges.
    """
    if max_dim < 0:
        raise ValidationError("max_dim must be non-negative")
    bad = check_semimetric(d)
    if bad:
        raise SemimetricViolation(bad)
    filt = FlagFiltration(d, max_dim + 1, threshold, max_simplices)
    n = d.size
    bars: List[Bar] = []

    # degree 0, and the positive edges for degree 1
    uf = UnionFind(n)
    forest: List[List[int]] = [[] for _ in range(n)]
    positive_edges: List[int] = []
    edges, edge_values = filt.vertices[1], filt.values[1]
    for r, (u, v) in enumerate(edges):
        if uf.union(u, v):
            forest[u].append(v)
            forest[v].append(u)
            if edge_values[r] > 0:
                bars.append(Bar(0, 0.0, edge_values[r]))
        else:
            positive_edges.append(r)
    for _ in uf.components():
        bars.append(Bar(0, 0.0, math.inf))
    if max_dim == 0:
        return Barcode(tuple(bars))

    # boundary reductions, top dimension first, with clearing
    reductions = {}
    cleared: Set[int] = set()
    for dim in range(max_dim + 1, 1, -1):
        pivot_of, columns, zero = filt.reduce(dim, cleared)
        reductions[dim] = (pivot_of, columns, zero)
        cleared = set(pivot_of)  # rows that are pivots are positive one level down

    for dim in range(1, max_dim + 1):
        positives = positive_edges if dim == 1 else sorted(reductions[dim][2])
        pivot_of, columns, _ = reductions[dim + 1]
        birth_values = filt.values[dim]
        death_values = filt.values[dim + 1]
        for sigma in positives:
            birth = birth_values[sigma]
            tau = pivot_of.get(sigma)
            death = math.inf if tau is None else death_values[tau]
            if birth == death:
                continue
            rep = None
            if with_reps and dim == 1:
                if tau is not None:
                    cycle = set(columns[tau])
                else:
                    u, v = filt.vertices[1][sigma]
                    cycle = {sigma} | {filt.rank[1][e] for e in _forest_path(forest, u, v)}
                cycle = exhaust_cycle(cycle, birth, pivot_of, columns, death_values)
                rep = _edges_of(filt, cycle)
            bars.append(Bar(dim, birth, death, rep))
    return Barcode(tuple(bars))


def snv_bars(d: SemimetricMatrix, max_simplices: int = DEFAULT_MAX_SIMPLICES) -> Barcode:
    """Degree-1 bars born at scale 1, with representatives, computed up to scale 2.

    Their representatives consist of edges of length exactly 1.
    """
    full = vr_barcode(d, max_dim=1, threshold=2, with_reps=True, max_simplices=max_simplices)
    return Barcode(tuple(b for b in full.bars if b.dim == 1 and b.birth == 1))


def cycle_boundary(edges: Iterable[Edge]) -> List[int]:
    """Vertices of odd degree: the F2 boundary of a 1-chain."""
    odd: Set[int] = set()
    for u, v in edges:
        odd ^= {u}
        odd ^= {v}
    return sorted(odd)


def _chain(edges: Iterable[Sequence[int]]) -> Set[Edge]:
    chain: Set[Edge] = set()
    for u, v in edges:
        if u == v:
            raise ValidationError(f"degenerate edge ({u},{v})")
        chain ^= {(min(u, v), max(u, v))}
    return chain


def tighten_representative(cycle: Iterable[Sequence[int]], d: SemimetricMatrix,
                           max_simplices: int = DEFAULT_MAX_SIMPLICES) -> Tuple[Edge, ...]:
    """Exhaustively reduce a 1-cycle against the triangles present at its own scale.

    The scale is the longest edge of the cycle.  The result differs from the
    input by boundaries of triangles of diameter <= that scale, its longest edge
    is never longer, and applying the function again returns it unchanged.
    """
    chain = _chain(cycle)
    if not chain:
        return ()
    if cycle_boundary(chain):
        raise ValidationError("input chain is not a cycle")
    birth = max(d[e] for e in chain)
    if math.isinf(birth):
        raise ValidationError("cycle uses a pair at infinite distance")
    filt = FlagFiltration(d, 2, birth, max_simplices)
    pivot_of, columns, _ = filt.reduce(2)
    ranks = {filt.rank[1][e] for e in chain}
    return _edges_of(filt, exhaust_cycle(ranks, birth, pivot_of, columns, filt.values[2]))
