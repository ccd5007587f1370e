"""Brute-force simplicial homology over F2, used as ground truth in tests.

Everything here is dense and exhaustive on purpose: complexes are built by
checking every vertex subset, ranks come from plain Gaussian elimination, and
barcodes are recovered from the rank function by inclusion-exclusion.  None
of it shares code with the persistence engine.
"""
from __future__ import annotations

import math
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

import numpy as np

from .errors import ValidationError

Simplex = Tuple[int, ...]


class ExplicitComplex:
    """A finite simplicial complex given by its simplices (closed under faces)."""

    def __init__(self, simplices: Iterable[Iterable[int]]):
        simps = set()
        for s in simplices:
            t = tuple(sorted(set(int(v) for v in s)))
            if not t:
                raise ValidationError("empty simplex")
            simps.add(t)
        for s in simps:
            for k in range(1, len(s)):
                for face in combinations(s, k):
                    if face not in simps:
                        raise ValidationError(f"face {face} of {s} is missing")
        self.simplices: FrozenSet[Simplex] = frozenset(simps)

    @classmethod
    def flag(cls, vertices: Iterable[int], edges: Iterable[Sequence[int]], max_dim: int) -> "ExplicitComplex":
        """Clique complex up to ``max_dim``, found by testing every vertex subset."""
        verts = sorted(set(vertices))
        edge_set = {frozenset(e) for e in edges}
        for e in edge_set:
            if not e <= set(verts):
                raise ValidationError(f"edge {tuple(e)} uses a vertex not in the complex")
        simps = []
        for k in range(1, max_dim + 2):
            for sub in combinations(verts, k):
                if all(frozenset(p) in edge_set for p in combinations(sub, 2)):
                    simps.append(sub)
        return cls(simps)

    def of_dim(self, dim: int) -> List[Simplex]:
        return sorted(s for s in self.simplices if len(s) == dim + 1)

    def __le__(self, other: "ExplicitComplex") -> bool:
        return self.simplices <= other.simplices

    def __len__(self) -> int:
        return len(self.simplices)


def rank_f2(m: np.ndarray) -> int:
    a = (np.asarray(m, dtype=np.uint8) & 1).copy()
    rows, cols = a.shape
    r = 0
    for c in range(cols):
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        a[[r, p]] = a[[p, r]]
        below = np.nonzero(a[:, c])[0]
        for i in below:
            if i != r:
                a[i] ^= a[r]
        r += 1
        if r == rows:
            break
    return r


def nullspace_f2(m: np.ndarray) -> np.ndarray:
    """Basis of the kernel of ``m`` over F2, one vector per row."""
    a = (np.asarray(m, dtype=np.uint8) & 1).copy()
    rows, cols = a.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        hits = np.nonzero(a[r:, c])[0]
        if hits.size == 0:
            continue
        p = r + hits[0]
        a[[r, p]] = a[[p, r]]
        for i in np.nonzero(a[:, c])[0]:
            if i != r:
                a[i] ^= a[r]
        pivots.append(c)
        r += 1
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.uint8)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = a[i, f]
    return basis


def boundary_matrix(rows: Sequence[Simplex], cols: Sequence[Simplex]) -> np.ndarray:
    index = {s: i for i, s in enumerate(rows)}
    m = np.zeros((len(rows), len(cols)), dtype=np.uint8)
    for j, s in enumerate(cols):
        for k in range(len(s)):
            m[index[s[:k] + s[k + 1:]], j] = 1
    return m


def betti(x: ExplicitComplex, dim: int) -> int:
    """dim ker d_dim - rank d_(dim+1) over F2."""
    cells = x.of_dim(dim)
    if not cells:
        return 0
    if dim == 0:
        kernel = len(cells)
    else:
        kernel = len(cells) - rank_f2(boundary_matrix(x.of_dim(dim - 1), cells))
    higher = x.of_dim(dim + 1)
    image = rank_f2(boundary_matrix(cells, higher)) if higher else 0
    return kernel - image


def inclusion_rank(sub: ExplicitComplex, sup: ExplicitComplex, dim: int) -> int:
    """Rank of ``H_dim(sub) -> H_dim(sup)`` induced by inclusion."""
    if not sub <= sup:
        raise ValidationError("first complex is not a subcomplex of the second")
    sub_cells = sub.of_dim(dim)
    if not sub_cells:
        return 0
    sup_cells = sup.of_dim(dim)
    pos = {s: i for i, s in enumerate(sup_cells)}
    if dim == 0:
        cycles = np.eye(len(sub_cells), dtype=np.uint8)
    else:
        cycles = nullspace_f2(boundary_matrix(sub.of_dim(dim - 1), sub_cells))
    if cycles.shape[0] == 0:
        return 0
    embedded = np.zeros((cycles.shape[0], len(sup_cells)), dtype=np.uint8)
    for j, s in enumerate(sub_cells):
        embedded[:, pos[s]] = cycles[:, j]
    higher = sup.of_dim(dim + 1)
    bounds = boundary_matrix(sup_cells, higher).T if higher else np.zeros((0, len(sup_cells)), dtype=np.uint8)
    return rank_f2(np.vstack([embedded, bounds])) - rank_f2(bounds)


def barcode_from_filtration(chain: Sequence[ExplicitComplex], dim: int) -> List[Tuple[int, float]]:
    """Bars ``(birth, death)`` of a nested sequence ``X_1 <= ... <= X_m``.

    Steps are 1-based and ``death = inf`` for classes alive at ``X_m``.
    Multiplicities come from the ranks ``r(i, j)`` of the inclusions.
    """
    m = len(chain)
    for i in range(m - 1):
        if not chain[i] <= chain[i + 1]:
            raise ValidationError(f"filtration is not nested at step {i + 1}")
    r: Dict[Tuple[int, int], int] = {}
    for i in range(1, m + 1):
        for j in range(i, m + 1):
            r[i, j] = inclusion_rank(chain[i - 1], chain[j - 1], dim)

    def rank(i, j):
        if i < 1 or j > m or i > j:
            return 0
        return r[i, j]

    bars: List[Tuple[int, float]] = []
    for i in range(1, m + 1):
        for j in range(i + 1, m + 2):
            # classes born at i that are alive at j-1 and dead at j
            mult = rank(i, j - 1) - rank(i - 1, j - 1) - rank(i, j) + rank(i - 1, j)
            if mult < 0:
                raise AssertionError("negative bar multiplicity; rank function inconsistent")
            death = math.inf if j == m + 1 else j
            bars.extend([(i, death)] * mult)
    return sorted(bars)


def vr_filtration_chain(dense: np.ndarray, max_dim: int) -> Tuple[List[float], List[ExplicitComplex]]:
    """Vietoris-Rips complexes at scale 0 and at every distinct finite distance."""
    dense = np.asarray(dense, dtype=float)
    n = dense.shape[0]
    scales = [0.0] + sorted({float(x) for x in dense[np.triu_indices(n, 1)] if math.isfinite(x)})
    chain = []
    for r in scales:
        edges = [(i, j) for i in range(n) for j in range(i + 1, n) if dense[i, j] <= r]
        chain.append(ExplicitComplex.flag(range(n), edges, max_dim + 1))
    return scales, chain


def vr_barcode_oracle(dense, max_dim: int) -> Dict[int, List[Tuple[float, float]]]:
    """Barcode of the Vietoris-Rips filtration of a dense semimetric, per degree, in scale units."""
    scales, chain = vr_filtration_chain(dense, max_dim)
    out = {}
    for dim in range(max_dim + 1):
        bars = barcode_from_filtration(chain, dim)
        out[dim] = sorted((scales[b - 1], math.inf if math.isinf(d) else scales[d - 1]) for b, d in bars)
    return out


def bars_containing(bars: Iterable[Tuple[float, float]], i: float, j: float) -> int:
    return sum(1 for b, d in bars if b <= i and j < d)
