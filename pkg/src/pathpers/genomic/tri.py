"""Topological recurrence index of mutations over sampling time.

The time-filtered Hamming dataset is filtered over ``{1..m} x h(S)``.  Along
the path ``(1,1) <= ... <= (m,1)`` only unit edges exist, so the degree-1
barcode of that path is computed in one engine run on a transformed matrix:

* a unit pair entering at time ``k`` gets distance ``k``;
* a pair at Hamming distance 2 entering at time ``k`` gets ``m + k``;
* everything else is ``inf``.

Every unit edge precedes every distance-2 edge, so bars born at ``<= m`` are
exactly the pathwise classes (SNV cycles), and the distance-2 triangles only
serve to close them off with small death cycles that become their
representatives.  Deaths past ``m`` are reported as ``inf`` on the path.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

import numpy as np

from ..engine import Bar, Barcode, DEFAULT_MAX_SIMPLICES, vr_barcode
from ..errors import ValidationError
from ..multifiltration import PointAnnotations, build_pathwise_edges
from ..pathwise import PathwiseBarcode
from ..poset import Antichain, Path
from ..semimetric import SemimetricMatrix
from .dataset import AlignedDataset, Mutation, edge_to_mutation, hamming_matrix


@dataclass
class TriTable:
    """Per-mutation counts indexed by time bin ``1..n_bins``.

    ``tri[mut][t-1]`` counts SNV bars alive at ``t`` whose representative
    realizes ``mut``; ``births[mut][t-1]`` counts those born at or before ``t``.
    """

    n_bins: int
    tri: Dict[Mutation, List[int]] = field(default_factory=dict)
    births: Dict[Mutation, List[int]] = field(default_factory=dict)
    ambiguous: Dict[Mutation, bool] = field(default_factory=dict)

    def mutations(self) -> List[Mutation]:
        return sorted(self.tri)

    def at(self, mutation: Mutation, t: int) -> int:
        series = self.tri.get(mutation)
        return 0 if series is None else series[t - 1]

    def total(self, mutation: Mutation) -> int:
        """tRI at the last time bin."""
        return self.at(mutation, self.n_bins)

    def __len__(self) -> int:
        return len(self.tri)


@dataclass
class TriResult:
    dataset: AlignedDataset
    barcode: PathwiseBarcode
    table: TriTable
    # mutations realized by each SNV bar, aligned with barcode.in_dim(1)
    bar_mutations: List[Tuple[Mutation, ...]]

    def birth_steps(self) -> List[int]:
        return sorted(int(b.birth) for b in self.barcode.in_dim(1))


def time_path(n_bins: int, scale: float) -> Path:
    return Path(tuple((float(k), float(scale)) for k in range(1, n_bins + 1)))


def encoded_matrix(h: SemimetricMatrix, data: AlignedDataset, *, threads: int = 1) -> SemimetricMatrix:
    """Transformed distances: unit edges at their entry step, distance-2 pairs after all of them."""
    m = data.n_bins
    points = PointAnnotations(tuple(Antichain(((float(t),),)) for t in data.times))
    unit = build_pathwise_edges(h, points, time_path(m, 1), threads=threads)
    two = build_pathwise_edges(h, points, time_path(m, 2), threads=threads)
    values = np.full(h.values.size, np.inf)
    idx2 = two.hi * (two.hi - 1) // 2 + two.lo
    values[idx2] = m + two.step
    idx1 = unit.hi * (unit.hi - 1) // 2 + unit.lo
    values[idx1] = unit.step
    return SemimetricMatrix(h.size, values)


def tri_analysis(data: AlignedDataset, *, threads: int = 1,
                 max_simplices: int = DEFAULT_MAX_SIMPLICES) -> TriResult:
    if len(data) < 2:
        raise ValidationError("need at least two distinct sequences")
    m = data.n_bins
    h = hamming_matrix(data, threads=threads)
    d = encoded_matrix(h, data, threads=threads)
    full = vr_barcode(d, max_dim=1, threshold=2 * m, with_reps=True, max_simplices=max_simplices)

    bars: List[Bar] = []
    for b in full.in_dim(1):
        if b.birth > m:
            continue
        death = b.death if b.death <= m else math.inf
        bars.append(Bar(1, int(b.birth), death if math.isinf(death) else int(death), b.rep))
    barcode = PathwiseBarcode(time_path(m, 1), Barcode(tuple(bars)))

    table = TriTable(m)
    bar_mutations = []
    for b in barcode.in_dim(1):
        muts = {}
        for u, v in b.rep:
            mut = edge_to_mutation(u, v, data)
            muts[mut] = muts.get(mut, False) or mut.ambiguous
        bar_mutations.append(tuple(sorted(muts)))
        for mut, amb in muts.items():
            series = table.tri.setdefault(mut, [0] * m)
            born = table.births.setdefault(mut, [0] * m)
            table.ambiguous[mut] = table.ambiguous.get(mut, False) or amb
            for t in range(1, m + 1):
                if b.contains(t):
                    series[t - 1] += 1
                if b.birth <= t:
                    born[t - 1] += 1
    return TriResult(data, barcode, table, bar_mutations)


def tri_csv(table: TriTable) -> str:
    lines = ["position,from,to,time_bin,tri"]
    for mut in table.mutations():
        for t, count in enumerate(table.tri[mut], start=1):
            lines.append(f"{mut.position},{mut.from_symbol},{mut.to_symbol},{t},{count}")
    return "\n".join(lines) + "\n"


def tri_summary(result: TriResult) -> dict:
    table, data = result.table, result.dataset
    mutations = []
    for mut in table.mutations():
        mutations.append({
            "position": mut.position, "from": mut.from_symbol, "to": mut.to_symbol,
            "label": mut.label,
            "ambiguous": table.ambiguous[mut],
            "tri_final": table.total(mut),
            "tri_max": max(table.tri[mut]),
            "tri_bars_containing_t": table.tri[mut],
            "cumulative_births": table.births[mut],
        })
    bars = []
    for b, muts in zip(result.barcode.in_dim(1), result.bar_mutations):
        bars.append({
            "birth": b.birth, "death": None if math.isinf(b.death) else b.death,
            "rep": [[data.ids[u], data.ids[v]] for u, v in b.rep],
            "mutations": [m.label for m in muts],
        })
    return {
        "n_sequences": len(data),
        "n_samples": int(sum(data.counts)),
        "n_bins": data.n_bins,
        "bin_labels": list(data.bin_labels),
        "n_snv_bars": len(bars),
        "mutations": mutations,
        "bars": bars,
    }
