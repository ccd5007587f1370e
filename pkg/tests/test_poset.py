import itertools

import pytest
from hypothesis import given, strategies as st

from pathpers.errors import DimensionMismatch, NonMonotonePath, ValidationError
from pathpers.poset import Antichain, Path, first_reachable_step, leq, minimal_elements, validate_path


def test_leq_examples():
    assert leq((1, 2), (2, 2))
    assert not leq((1, 2), (2, 1))
    assert not leq((2, 1), (1, 2))
    assert leq((3, 3), (3, 3))


def test_leq_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        leq((1, 2), (1, 2, 3))


def test_minimal_elements_examples():
    assert minimal_elements([(1, 2), (2, 1), (2, 2)]).elements == ((1, 2), (2, 1))
    assert minimal_elements([(1, 1)]).elements == ((1, 1),)
    assert minimal_elements([(1, 1), (1, 1)]).elements == ((1, 1),)


def test_minimal_elements_rejects_empty():
    with pytest.raises(ValidationError):
        minimal_elements([])


def test_antichain_rejects_comparable():
    with pytest.raises(ValidationError):
        Antichain(((1, 1), (2, 2)))


def test_antichain_sorted():
    assert Antichain(((2, 1), (1, 2))).elements == ((1, 2), (2, 1))


def test_first_reachable_step_examples():
    nu = Path(((1, 1), (2, 2)))
    assert first_reachable_step([(1, 2), (2, 1)], nu) == 2
    assert first_reachable_step([(5, 5)], nu) is None
    assert first_reachable_step([(1, 1)], Path(((1, 1),))) == 1


def test_validate_path_examples():
    assert len(validate_path([(1, 1), (1, 2), (2, 2)])) == 3
    assert len(validate_path([(1, 1)])) == 1
    with pytest.raises(NonMonotonePath) as info:
        validate_path([(1, 2), (2, 1)])
    assert info.value.pair == (1, 2)


def test_validate_path_empty():
    with pytest.raises(ValidationError):
        validate_path([])


grades = st.lists(st.tuples(st.integers(1, 4), st.integers(1, 4)), min_size=1, max_size=50)


@given(grades)
def test_leq_is_partial_order(sample):
    for a in sample:
        assert leq(a, a)
    for a, b in itertools.product(sample, repeat=2):
        if leq(a, b) and leq(b, a):
            assert a == b
    for a, b, c in itertools.product(sample[:15], repeat=3):
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


@given(grades)
def test_minimal_elements_is_antichain_covering_sample(sample):
    mins = minimal_elements(sample)
    for a, b in itertools.combinations(mins.elements, 2):
        assert not leq(a, b) and not leq(b, a)
    for g in sample:
        assert any(leq(m, g) for m in mins)


@given(grades, st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=5))
def test_first_reachable_step_is_first(sample, increments):
    step = (1, 1)
    steps = []
    for a, b in increments:
        step = (step[0] + a, step[1] + b)
        steps.append(step)
    nu = Path(tuple(steps))
    q = minimal_elements(sample).elements
    k = first_reachable_step(q, nu)
    reach = [any(leq(g, s) for g in q) for s in steps]
    if k is None:
        assert not any(reach)
    else:
        assert reach[k - 1] and not any(reach[:k - 1])
        assert all(reach[k - 1:])
