"""Synthetic phylogenies with planted homoplasies.

A random recursive tree is grown from a random root sequence, one point
mutation per tree edge.  Each planted homoplasy picks an attachment node
``R`` and adds three sequences ``R+p``, ``R+M`` and ``R+p+M``, where ``M`` is
one shared mutation and ``p`` a mutation private to that homoplasy.  The four
sequences form a unit square in Hamming space: ``M`` is acquired twice, once
on each side.

When the sequence is long enough every tree edge gets a fresh site and the
tree contributes no cycles of its own ("clean" mode).  Otherwise sites are
reused and recurrent mutations occur naturally on top of the planted ones.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import List, Tuple

import numpy as np

from ..errors import ValidationError
from .dataset import AlignedDataset

BASES = "ACGT"
MAX_RETRIES = 1000


@dataclass(frozen=True)
class SynthSpec:
    length: int = 200
    tree_size: int = 50
    homoplasies: int = 0
    time_bins: int = 3
    seed: int = 0

    def validate(self) -> None:
        if self.length < 2:
            raise ValidationError("sequence length must be at least 2")
        if self.tree_size < 1:
            raise ValidationError("tree_size must be at least 1")
        if self.homoplasies < 0:
            raise ValidationError("homoplasy count must be non-negative")
        if self.time_bins < 1:
            raise ValidationError("need at least one time bin")
        if self.homoplasies > self.tree_size:
            raise ValidationError("more homoplasies than tree nodes to attach them to")


def _mutate(rng: np.random.Generator, seq: List[str], site: int) -> List[str]:
    out = list(seq)
    out[site] = str(rng.choice([b for b in BASES if b != seq[site]]))
    return out


def _hamming(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


def synth_dataset(spec: SynthSpec) -> Tuple[AlignedDataset, dict]:
    """Build the dataset and the planted ground truth; deterministic in ``spec.seed``."""
    spec.validate()
    rng = np.random.default_rng(spec.seed)
    L, k, n = spec.length, spec.homoplasies, spec.tree_size
    root = [str(c) for c in rng.choice(list(BASES), size=L)]
    sites = [int(s) for s in rng.permutation(L)]
    shared_site = sites[0]
    clean = L - 1 - k >= n - 1
    fresh = iter(sites[1 + k:])
    reusable = [s for s in range(L) if s != shared_site]

    seqs = [root]
    parents = [-1]
    seen = {"".join(root)}
    for node in range(1, n):
        for _ in range(MAX_RETRIES):
            parent = int(rng.integers(node))
            site = next(fresh) if clean else int(rng.choice(reusable))
            child = _mutate(rng, seqs[parent], site)
            if "".join(child) not in seen:
                break
        else:
            raise ValidationError("could not grow distinct sequences; increase the sequence length")
        seqs.append(child)
        parents.append(parent)
        seen.add("".join(child))
    times = [1 + (i * spec.time_bins) // n for i in range(n)]

    # attachment nodes pairwise at Hamming distance >= 2 so the planted squares
    # do not touch each other through unit edges
    attach: List[int] = []
    for cand in (int(c) for c in rng.permutation(n)):
        if len(attach) == k:
            break
        if all(_hamming(seqs[cand], seqs[a]) >= 2 for a in attach):
            attach.append(cand)
    if len(attach) < k:
        raise ValidationError(f"cannot place {k} disjoint homoplasies on a tree of {n} nodes")
    target = str(rng.choice([b for b in BASES if b != root[shared_site]]))

    ids = [f"t{i}" for i in range(n)]
    planted = []
    for h, r in enumerate(sorted(attach)):
        for _ in range(MAX_RETRIES):
            site = sites[1 + h] if clean else int(rng.choice(reusable))
            a = _mutate(rng, seqs[r], site)
            if "".join(a) not in seen:
                break
        else:
            raise ValidationError("could not plant a distinct homoplasy; increase the sequence length")
        b = list(seqs[r])
        b[shared_site] = target
        c = list(a)
        c[shared_site] = target
        when = int(rng.integers(times[r], spec.time_bins + 1))
        new_ids = [f"h{h}a", f"h{h}b", f"h{h}c"]
        for sid, s in zip(new_ids, (a, b, c)):
            seqs.append(s)
            seen.add("".join(s))
            ids.append(sid)
            times.append(when)
        planted.append({"attach": ids[r], "private_site": site + 1, "time_bin": when, "ids": new_ids})

    data = AlignedDataset(ids=tuple(ids), sequences=tuple("".join(s) for s in seqs),
                          times=tuple(times), n_bins=spec.time_bins, reference="".join(root))
    truth = {
        "spec": asdict(spec),
        "clean": clean,
        "mutation": {"position": shared_site + 1, "from": root[shared_site], "to": target},
        "homoplasies": planted,
    }
    return data, truth
