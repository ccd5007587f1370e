import math

import pytest

from pathpers.errors import IncomparablePair, ValidationError
from pathpers.multifiltration import EdgeAnnotations, edge_annotations_from_complex
from pathpers.oracle import barcode_from_filtration, betti, inclusion_rank
from pathpers.pathwise import pathwise_barcode, rank_invariant, rank_invariant_table
from pathpers.poset import Path
from pathpers.testing import complex_at, explicit_chain, random_filtered_complex, random_path

SQUARE = [(0, 1), (1, 2), (2, 3), (0, 3)]


def bifiltered_square(diag=(2, 2)):
    items = [(e, [(1, 1)]) for e in SQUARE] + [((0, 2), [diag]), ((1, 3), [diag])]
    return edge_annotations_from_complex(items)


def test_bifiltered_four_cycle():
    pb = pathwise_barcode(bifiltered_square(), 4, Path(((1, 1), (2, 2))))
    assert pb.intervals(1) == [(1, 2)]


def test_constant_path_counts_betti():
    ann = edge_annotations_from_complex([(e, [(1, 1)]) for e in SQUARE] +
                                        [(tuple(x + 4 for x in e), [(1, 1)]) for e in SQUARE])
    pb = pathwise_barcode(ann, 8, Path(((1, 1),)))
    assert pb.intervals(1) == [(1, math.inf), (1, math.inf)]


def test_no_edges_no_bars():
    pb = pathwise_barcode(EdgeAnnotations(), 5, Path(((1, 1), (2, 2))), max_dim=2)
    assert pb.in_dim(1) == [] and pb.in_dim(2) == []


def test_authoritative_flag():
    pb = pathwise_barcode(bifiltered_square(), 4, Path(((1, 1), (2, 2))))
    assert not pb.authoritative(0) and pb.authoritative(1) and pb.authoritative(2)


def test_max_dim_zero_rejected():
    with pytest.raises(ValidationError):
        pathwise_barcode(bifiltered_square(), 4, Path(((1, 1),)), max_dim=0)


def test_matches_oracle(rng):
    for _ in range(60):
        n = int(rng.integers(2, 9))
        vertex, edges = random_filtered_complex(rng, n)
        nu = random_path(rng, 4)
        pb = pathwise_barcode(edges, n, nu, max_dim=2)
        chain = explicit_chain(nu, vertex, edges, 3)
        for dim in (1, 2):
            assert pb.intervals(dim) == barcode_from_filtration(chain, dim)


def test_repeated_step_reindexes(rng):
    for _ in range(30):
        n = int(rng.integers(3, 9))
        _, edges = random_filtered_complex(rng, n)
        nu = random_path(rng, 4)
        k = int(rng.integers(len(nu)))
        steps = list(nu.steps)
        longer = Path(tuple(steps[:k + 1] + [steps[k]] + steps[k + 1:]))
        base = pathwise_barcode(edges, n, nu, max_dim=2)
        ref = pathwise_barcode(edges, n, longer, max_dim=2)

        def squash(x):
            # step index in ``longer`` -> index in ``nu``
            return x if math.isinf(x) or x <= k + 1 else x - 1

        for dim in (1, 2):
            mapped = sorted((squash(b), squash(d)) for b, d in ref.intervals(dim))
            assert mapped == base.intervals(dim)


def test_rank_examples():
    ann = bifiltered_square()
    assert rank_invariant(ann, 4, (1, 1), (1, 1), 1) == 1
    assert rank_invariant(ann, 4, (1, 1), (2, 2), 1) == 0
    assert rank_invariant(ann, 4, (1, 1), (2, 1), 1) == 1
    doubled = edge_annotations_from_complex([(e, [(1, 1)]) for e in SQUARE] +
                                            [(tuple(x + 4 for x in e), [(1, 1)]) for e in SQUARE])
    assert rank_invariant(doubled, 8, (1, 1), (3, 3), 1) == 2


def test_rank_errors():
    with pytest.raises(IncomparablePair):
        rank_invariant(bifiltered_square(), 4, (1, 2), (2, 1), 1)
    with pytest.raises(ValidationError):
        rank_invariant(bifiltered_square(), 4, (1, 1), (2, 2), 0)


def test_rank_table_examples():
    ann = bifiltered_square()
    assert rank_invariant_table(ann, 4, [(1, 1)], 1) == {((1, 1), (1, 1)): 1}
    assert len(rank_invariant_table(ann, 4, [(1, 1), (2, 2)], 1)) == 3
    anti = rank_invariant_table(ann, 4, [(1, 2), (2, 1)], 1)
    assert sorted(anti) == [((1, 2), (1, 2)), ((2, 1), (2, 1))]


def test_rank_matches_inclusion_rank(rng):
    grid = [(float(a), float(b)) for a in range(1, 5) for b in range(1, 5)]
    for _ in range(10):
        n = int(rng.integers(3, 8))
        vertex, edges = random_filtered_complex(rng, n)
        sample = [grid[i] for i in rng.choice(len(grid), size=5, replace=False)]
        table = rank_invariant_table(edges, n, sample, 1)
        for (v, w), r in table.items():
            xv, xw = complex_at(v, vertex, edges, 2), complex_at(w, vertex, edges, 2)
            assert r == inclusion_rank(xv, xw, 1)
            if v == w:
                assert r == betti(xv, 1)
