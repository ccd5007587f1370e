"""Aligned, time-stamped sequence datasets and their Hamming geometry."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

from ..errors import ValidationError
from ..semimetric import SemimetricMatrix

ALPHABET = "ACGT-"
_CODES = np.full(256, 255, dtype=np.uint8)
for _i, _c in enumerate(ALPHABET):
    _CODES[ord(_c)] = _i


def is_clean(seq: str) -> bool:
    return all(c in ALPHABET for c in seq)


@dataclass(frozen=True)
class AlignedDataset:
    """Distinct aligned sequences, each with the earliest time bin it was sampled in.

    ``times`` are 1-based bin indices into ``bin_labels``; bins with no new
    sequence are kept so that indices map to calendar time.
    """

    ids: Tuple[str, ...]
    sequences: Tuple[str, ...]
    times: Tuple[int, ...]
    n_bins: int
    counts: Tuple[int, ...] = ()
    reference: Optional[str] = None
    bin_labels: Tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.sequences)
        if n == 0:
            raise ValidationError("dataset has no sequences")
        if not self.counts:
            object.__setattr__(self, "counts", (1,) * n)
        if not self.bin_labels:
            object.__setattr__(self, "bin_labels", tuple(str(t) for t in range(1, self.n_bins + 1)))
        if not (len(self.ids) == len(self.times) == len(self.counts) == n):
            raise ValidationError("ids, sequences, times and counts must have equal length")
        if len(self.bin_labels) != self.n_bins:
            raise ValidationError("one label per time bin expected")
        length = len(self.sequences[0])
        for s in self.sequences:
            if len(s) != length:
                raise ValidationError(f"sequences of lengths {length} and {len(s)} are not aligned")
            if not is_clean(s):
                raise ValidationError("sequences may only contain A, C, G, T and -")
        if len(set(self.sequences)) != n:
            raise ValidationError("sequences must be distinct; collapse duplicates first")
        if any(not (1 <= t <= self.n_bins) for t in self.times):
            raise ValidationError(f"time bins must lie in 1..{self.n_bins}")
        if self.reference is not None and len(self.reference) != length:
            raise ValidationError("reference length differs from the alignment length")

    @classmethod
    def from_samples(cls, samples: Iterable[Tuple[str, str, int]], n_bins: int,
                     reference: Optional[str] = None, bin_labels: Sequence[str] = ()) -> "AlignedDataset":
        """Collapse ``(id, sequence, time_bin)`` samples into distinct sequences.

        A sequence keeps the id of its earliest sample, the minimum time bin,
        and the number of samples as its count.
        """
        first: dict = {}
        for sid, seq, t in samples:
            if seq in first:
                old_id, old_t, count = first[seq]
                if (t, sid) < (old_t, old_id):
                    old_id, old_t = sid, t
                first[seq] = (old_id, old_t, count + 1)
            else:
                first[seq] = (sid, t, 1)
        ordered = sorted(first.items(), key=lambda kv: (kv[1][1], kv[1][0]))
        return cls(ids=tuple(v[0] for _, v in ordered),
                   sequences=tuple(s for s, _ in ordered),
                   times=tuple(v[1] for _, v in ordered),
                   n_bins=n_bins,
                   counts=tuple(v[2] for _, v in ordered),
                   reference=reference,
                   bin_labels=tuple(bin_labels))

    def __len__(self) -> int:
        return len(self.sequences)

    @property
    def length(self) -> int:
        return len(self.sequences[0])

    def encoded(self) -> np.ndarray:
        raw = np.frombuffer("".join(self.sequences).encode("ascii"), dtype=np.uint8)
        return _CODES[raw].reshape(len(self), self.length)

    def truncate(self, t: int) -> "AlignedDataset":
        """The sub-dataset sampled up to bin ``t``, with bins ``1..t``."""
        keep = [i for i, ti in enumerate(self.times) if ti <= t]
        return AlignedDataset(ids=tuple(self.ids[i] for i in keep),
                              sequences=tuple(self.sequences[i] for i in keep),
                              times=tuple(self.times[i] for i in keep),
                              n_bins=t,
                              counts=tuple(self.counts[i] for i in keep),
                              reference=self.reference,
                              bin_labels=self.bin_labels[:t])


def hamming_matrix(data: AlignedDataset | Sequence[str], *, threads: int = 1,
                   block_bytes: int = 1 << 26) -> SemimetricMatrix:
    """Number of differing positions for every pair of sequences."""
    if isinstance(data, AlignedDataset):
        codes = data.encoded()
    else:
        seqs = list(data)
        if not seqs:
            raise ValidationError("no sequences")
        if len({len(s) for s in seqs}) != 1:
            raise ValidationError("sequences must have equal length")
        codes = np.frombuffer("".join(seqs).encode("ascii"), dtype=np.uint8).reshape(len(seqs), -1)
    n, length = codes.shape
    values = np.empty(n * (n - 1) // 2, dtype=np.float64)
    rows_per_block = max(1, block_bytes // max(1, n * length))
    blocks = [(a, min(n, a + rows_per_block)) for a in range(1, n, rows_per_block)]

    def work(block):
        a, b = block
        diff = (codes[a:b, None, :] != codes[None, :b, :]).sum(axis=2)
        for i in range(a, b):
            start = i * (i - 1) // 2
            values[start:start + i] = diff[i - a, :i]

    if threads > 1 and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            list(pool.map(work, blocks))
    else:
        for block in blocks:
            work(block)
    if n > 1 and values.min() == 0:
        raise ValidationError("identical sequences found; Hamming distance would not be a semimetric")
    return SemimetricMatrix(n, values)


@dataclass(frozen=True, order=True)
class Mutation:
    """A single-symbol change at a 1-based alignment position."""

    position: int
    from_symbol: str
    to_symbol: str
    ambiguous: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.from_symbol == self.to_symbol:
            raise ValidationError("a mutation must change the symbol")
        if self.position < 1:
            raise ValidationError("positions are 1-based")

    @property
    def label(self) -> str:
        return f"{self.from_symbol}{self.position}{self.to_symbol}"


def edge_to_mutation(i: int, j: int, data: AlignedDataset) -> Mutation:
    """The single-position change separating sequences ``i`` and ``j``.

    Oriented away from the reference symbol when one endpoint carries it;
    otherwise from the earlier-sampled sequence (then the lower index) to the
    other, flagged ambiguous.
    """
    x, y = data.sequences[i], data.sequences[j]
    diffs = [p for p, (a, b) in enumerate(zip(x, y)) if a != b]
    if len(diffs) != 1:
        raise ValidationError(f"sequences {i} and {j} differ at {len(diffs)} positions, not 1")
    p = diffs[0]
    ref = data.reference
    if ref is not None and x[p] == ref[p]:
        return Mutation(p + 1, x[p], y[p])
    if ref is not None and y[p] == ref[p]:
        return Mutation(p + 1, y[p], x[p])
    lo, hi = (x, y) if (data.times[i], i) < (data.times[j], j) else (y, x)
    return Mutation(p + 1, lo[p], hi[p], ambiguous=True)
