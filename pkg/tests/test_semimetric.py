import numpy as np
import pytest
from hypothesis import given, strategies as st

from pathpers.errors import ParseError, ValidationError
from pathpers.semimetric import (SemimetricMatrix, condensed_index, format_lower_distance, parse_lower_distance,
                                 unrank_pairs)


def test_condensed_roundtrip():
    idx = np.arange(45)
    hi, lo = unrank_pairs(idx)
    assert all(condensed_index(int(h), int(l)) == k for k, (h, l) in enumerate(zip(hi, lo)))
    assert (lo < hi).all()


def test_symmetric_access():
    d = SemimetricMatrix(3, [1, 2, 3])
    assert d[1, 0] == d[0, 1] == 1
    assert d[2, 1] == 3 and d[1, 1] == 0


def test_from_dense_requires_symmetry():
    with pytest.raises(ValidationError):
        SemimetricMatrix.from_dense([[0, 1], [2, 0]])


def test_values_read_only():
    d = SemimetricMatrix(2, [1])
    with pytest.raises(ValueError):
        d.values[0] = 5


def test_parse_formats():
    assert parse_lower_distance("1\n2,inf\n").to_dense()[2, 1] == np.inf
    assert parse_lower_distance("").size == 1
    assert parse_lower_distance("1.5\n").values[0] == 1.5
    with pytest.raises(ParseError):
        parse_lower_distance("1\n2\n")
    with pytest.raises(ParseError):
        parse_lower_distance("x\n")


values = st.one_of(st.integers(1, 10).map(float), st.just(float("inf")),
                   st.floats(0.01, 100, allow_nan=False))


@given(st.integers(1, 7).flatmap(lambda n: st.tuples(st.just(n), st.lists(values, min_size=n * (n - 1) // 2,
                                                                             max_size=n * (n - 1) // 2))))
def test_format_parse_roundtrip(case):
    n, vals = case
    d = SemimetricMatrix(n, vals)
    text = format_lower_distance(d)
    assert parse_lower_distance(text) == d
    assert format_lower_distance(parse_lower_distance(text)) == text
