import math

import numpy as np
import pytest

from pathpers.engine import (Bar, Barcode, FiltrationSimplex, UnionFind, cycle_boundary, enumerate_cliques,
                             snv_bars, tighten_representative, vr_barcode)
from pathpers.errors import ResourceLimitError, SemimetricViolation, ValidationError
from pathpers.oracle import vr_barcode_oracle
from pathpers.semimetric import SemimetricMatrix

from conftest import four_cycle, random_semimetric


def test_four_cycle():
    bc = vr_barcode(four_cycle(), max_dim=2)
    assert bc.intervals(1) == [(1, 2)]
    assert bc.intervals(2) == []
    assert bc.intervals(0) == [(0, 1), (0, 1), (0, 1), (0, math.inf)]


def test_single_point():
    bc = vr_barcode(SemimetricMatrix(1), max_dim=2)
    assert bc.intervals(0) == [(0, math.inf)]
    assert len(bc) == 1


def test_unit_triangle_has_no_h1():
    assert vr_barcode(SemimetricMatrix(3, [1, 1, 1])).intervals(1) == []


def test_triangle_inequality_violation_accepted():
    d = SemimetricMatrix(3, [1, 5, 1])
    bc = vr_barcode(d, max_dim=2)
    assert {k: sorted(bc.intervals(k)) for k in range(3)} == vr_barcode_oracle(d.to_dense(), 2)


def test_zero_distance_rejected():
    with pytest.raises(SemimetricViolation):
        vr_barcode(SemimetricMatrix(2, [0]))


def test_threshold_zero_vertices_only():
    bc = vr_barcode(four_cycle(), max_dim=1, threshold=0)
    assert bc.intervals(0) == [(0, math.inf)] * 4 and bc.intervals(1) == []


def test_threshold_truncates_deaths():
    assert vr_barcode(four_cycle(), threshold=1).intervals(1) == [(1, math.inf)]


def test_resource_cap():
    with pytest.raises(ResourceLimitError):
        vr_barcode(four_cycle(), max_simplices=5)


def test_enumerate_cliques_examples():
    tri = SemimetricMatrix(3, [1, 1, 1])
    got = list(enumerate_cliques(tri, 2))
    assert [len(s.vertices) for s in got] == [1, 1, 1, 2, 2, 2, 3]
    assert all(isinstance(s, FiltrationSimplex) for s in got)
    assert all(len(s.vertices) == 1 for s in enumerate_cliques(tri, 2, threshold=0))
    gap = SemimetricMatrix(3, [1, np.inf, 1])
    assert (0, 2) not in [s.vertices for s in enumerate_cliques(gap, 2)]


def test_enumerate_cliques_order(rng):
    for _ in range(20):
        d = random_semimetric(rng, 7)
        got = list(enumerate_cliques(d, 2))
        keys = [(s.value, len(s.vertices), s.vertices) for s in got]
        assert keys == sorted(keys)
        for s in got:
            diam = max([d[u, v] for i, u in enumerate(s.vertices) for v in s.vertices[i + 1:]], default=0)
            assert s.value == diam


def test_engine_matches_oracle(rng):
    for _ in range(60):
        d = random_semimetric(rng, int(rng.integers(1, 8)))
        bc = vr_barcode(d, max_dim=2)
        assert {k: sorted(bc.intervals(k)) for k in range(3)} == vr_barcode_oracle(d.to_dense(), 2)


def test_non_integer_distances(rng):
    for _ in range(20):
        n = int(rng.integers(2, 7))
        d = SemimetricMatrix(n, np.round(rng.uniform(0.1, 3, size=n * (n - 1) // 2), 2))
        bc = vr_barcode(d, max_dim=2)
        assert {k: sorted(bc.intervals(k)) for k in range(3)} == vr_barcode_oracle(d.to_dense(), 2)


def test_snv_bars_examples():
    bars = snv_bars(four_cycle())
    assert len(bars) == 1 and len(bars.bars[0].rep) == 4
    assert len(snv_bars(SemimetricMatrix(4, [1, 2, 1, 3, 2, 1]))) == 0
    two = np.full((8, 8), np.inf)
    two[:4, :4] = four_cycle().to_dense()
    two[4:, 4:] = four_cycle().to_dense()
    assert len(snv_bars(SemimetricMatrix.from_dense(two))) == 2


def test_representatives_are_cycles(rng):
    for _ in range(40):
        d = random_semimetric(rng, int(rng.integers(3, 9)), p_inf=0.1)
        for b in vr_barcode(d, with_reps=True).in_dim(1):
            assert cycle_boundary(b.rep) == []
            assert max(d[e] for e in b.rep) == b.birth
            assert tighten_representative(b.rep, d) == tuple(sorted(b.rep))


def test_tighten_examples():
    d = four_cycle()
    cyc = ((0, 1), (0, 3), (1, 2), (2, 3))
    assert tighten_representative(cyc, d) == cyc
    assert tighten_representative((), d) == ()


def test_tighten_shortcut():
    # a 5-edge cycle through vertex 4 reduces to the 4-cycle via the triangle (0,1,4)
    dense = np.full((5, 5), 2.0)
    np.fill_diagonal(dense, 0)
    for u, v in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (1, 4)]:
        dense[u, v] = dense[v, u] = 1
    d = SemimetricMatrix.from_dense(dense)
    got = tighten_representative([(0, 4), (4, 1), (1, 2), (2, 3), (3, 0)], d)
    assert got == ((0, 1), (0, 3), (1, 2), (2, 3))


def test_tighten_rejects_non_cycle():
    with pytest.raises(ValidationError):
        tighten_representative([(0, 1), (1, 2)], four_cycle())


def test_bar_contains():
    b = Bar(1, 2, 4)
    assert not b.contains(1) and b.contains(2) and b.contains(3) and not b.contains(4)
    assert Bar(1, 1).is_essential and Bar(1, 1).contains(10 ** 9)


def test_barcode_sorted():
    bc = Barcode((Bar(1, 2, 3), Bar(0, 0), Bar(1, 1, 5)))
    assert [(b.dim, b.birth) for b in bc] == [(0, 0), (1, 1), (1, 2)]


def test_unionfind():
    uf = UnionFind(4)
    assert uf.union(0, 1) and uf.union(2, 3) and not uf.union(1, 0)
    assert uf.union(1, 3) and uf.find(0) == uf.find(2)
