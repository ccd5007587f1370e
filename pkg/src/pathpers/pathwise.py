"""Pathwise barcodes of multi-filtered flag complexes and the rank invariant."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple

from .engine import Bar, Barcode, DEFAULT_MAX_SIMPLICES, vr_barcode
from .errors import IncomparablePair, ValidationError
from .multifiltration import EdgeAnnotations, PathwiseEdgeList
from .poset import Grade, Path, as_grade, leq
from .transform import transform


@dataclass(frozen=True)
class PathwiseBarcode:
    """Bars of ``H_l`` along a path, in 1-based step units (``inf`` = never dies).

    Degree-0 bars are computed on the transformed space, which contains every
    vertex from the first step on; they are kept but not authoritative.
    """

    path: Path
    barcode: Barcode

    @property
    def bars(self) -> Tuple[Bar, ...]:
        return self.barcode.bars

    def in_dim(self, dim: int) -> List[Bar]:
        return self.barcode.in_dim(dim)

    def intervals(self, dim: int):
        return self.barcode.intervals(dim)

    @staticmethod
    def authoritative(dim: int) -> bool:
        return dim >= 1


def as_pathwise(barcode: Barcode, path: Path) -> PathwiseBarcode:
    """Re-express a barcode of a transformed matrix in path-step units.

    The transformed filtration starts at step 1, so vertex births at scale 0
    move to step 1.
    """
    bars = []
    for b in barcode.bars:
        birth = max(1, int(b.birth))
        death = b.death if math.isinf(b.death) else int(b.death)
        if birth < death:
            bars.append(Bar(b.dim, birth, death, b.rep))
    return PathwiseBarcode(path, Barcode(tuple(bars)))


def pathwise_barcode(annotations: EdgeAnnotations | PathwiseEdgeList, n: int, path: Path,
                     max_dim: int = 1, *, with_reps: bool = False, threads: int = 1,
                     max_simplices: int = DEFAULT_MAX_SIMPLICES) -> PathwiseBarcode:
    """Barcode of the one-parameter subfiltration selected by ``path``."""
    if max_dim < 1:
        raise ValidationError("pathwise barcodes need max_dim >= 1")
    d = transform(annotations, path, n, threads=threads)
    bc = vr_barcode(d, max_dim=max_dim, threshold=len(path), with_reps=with_reps,
                    max_simplices=max_simplices)
    return as_pathwise(bc, path)


def rank_invariant(annotations: EdgeAnnotations, n: int, v: Sequence[float], w: Sequence[float],
                   dim: int, *, max_simplices: int = DEFAULT_MAX_SIMPLICES) -> int:
    """Rank of ``H_dim(X_v) -> H_dim(X_w)``, read off the barcode along ``(v <= w)``.

    A bar contributes exactly when it contains both steps, i.e. it is born at
    step 1 and survives step 2.
    """
    if dim < 1:
        raise ValidationError("the rank invariant is only supported in degrees >= 1")
    v, w = as_grade(v), as_grade(w)
    if not leq(v, w):
        raise IncomparablePair(v, w)
    pb = pathwise_barcode(annotations, n, Path((v, w)), max_dim=dim, max_simplices=max_simplices)
    return sum(1 for b in pb.in_dim(dim) if b.birth == 1 and b.death > 2)


def rank_invariant_table(annotations: EdgeAnnotations, n: int, sample: Iterable[Sequence[float]],
                         dim: int, **kwargs) -> Dict[Tuple[Grade, Grade], int]:
    """``rank_invariant`` for every comparable ordered pair ``v <= w`` of the sample."""
    points = sorted({as_grade(p) for p in sample})
    table = {}
    for v in points:
        for w in points:
            if leq(v, w):
                table[v, w] = rank_invariant(annotations, n, v, w, dim, **kwargs)
    return table
