"""Bars and barcodes over F2."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Tuple

Edge = Tuple[int, int]


@dataclass(frozen=True, order=True)
class Bar:
    dim: int
    birth: float
    death: float = math.inf
    rep: Optional[Tuple[Edge, ...]] = field(default=None, compare=False)

    @property
    def is_essential(self) -> bool:
        return math.isinf(self.death)

    def contains(self, t: float) -> bool:
        return self.birth <= t < self.death


@dataclass(frozen=True)
class Barcode:
    bars: Tuple[Bar, ...]
    field: str = "F2"

    def __post_init__(self):
        object.__setattr__(self, "bars", tuple(sorted(self.bars, key=_bar_key)))

    def in_dim(self, dim: int) -> List[Bar]:
        return [b for b in self.bars if b.dim == dim]

    def intervals(self, dim: int) -> List[Tuple[float, float]]:
        """Sorted ``(birth, death)`` pairs in one dimension; the multiset view."""
        return sorted((b.birth, b.death) for b in self.bars if b.dim == dim)

    def __len__(self) -> int:
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)


def _bar_key(b: Bar):
    return (b.dim, b.birth, b.death, b.rep or ())


def intervals_of(bars: Iterable[Bar], dim: int) -> List[Tuple[float, float]]:
    return sorted((b.birth, b.death) for b in bars if b.dim == dim)
