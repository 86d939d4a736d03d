import pytest
from hypothesis import given, strategies as st

from gencomp import (
    EmptyVector,
    GeneralizedComposition,
    NegativeWeight,
    TypedPart,
    WeightVector,
    make_weight_vector,
    ones,
)


def test_make_weight_vector_basic():
    b = make_weight_vector([2, 1])
    assert b.r == 2
    assert b.weights == (2, 1)


def test_trailing_zero_preserved():
    b = make_weight_vector([1, 1, 0])
    assert b.r == 3
    assert b.weights == (1, 1, 0)


def test_empty_rejected():
    with pytest.raises(EmptyVector):
        make_weight_vector([])


def test_negative_rejected():
    with pytest.raises(NegativeWeight):
        make_weight_vector([1, -2])


def test_errors_are_value_errors():
    assert issubclass(EmptyVector, ValueError)
    assert issubclass(NegativeWeight, ValueError)


def test_non_integer_rejected():
    with pytest.raises(TypeError):
        make_weight_vector([1.5])


def test_all_zero_allowed():
    assert make_weight_vector([0, 0]).weights == (0, 0)


def test_indexing_is_one_based_with_zero_outside():
    b = make_weight_vector([3, 0, 5])
    assert [b[i] for i in range(0, 5)] == [0, 3, 0, 5, 0]


def test_ones():
    assert ones(3).weights == (1, 1, 1)
    assert ones(3).is_all_ones()
    with pytest.raises(EmptyVector):
        ones(0)


@given(st.lists(st.integers(min_value=0, max_value=10**30), min_size=1, max_size=8))
def test_construction_deterministic(raw):
    a, b = make_weight_vector(raw), make_weight_vector(list(raw))
    assert a == b and hash(a) == hash(b)
    assert a.r == len(raw) >= 1
    assert all(w >= 0 for w in a.weights)


def test_weight_vector_is_immutable():
    b = make_weight_vector([1])
    with pytest.raises(AttributeError):
        b.weights = (2,)


def test_typed_part_fits():
    b = make_weight_vector([2, 0, 1])
    assert TypedPart(1, 2).fits(b)
    assert not TypedPart(1, 3).fits(b)
    assert not TypedPart(2, 1).fits(b)  # weight 0: no types exist
    assert not TypedPart(4, 1).fits(b)
    with pytest.raises(ValueError):
        TypedPart(0, 1)
    with pytest.raises(ValueError):
        TypedPart(1, 0)


def test_composition_invariants():
    c = GeneralizedComposition.from_pairs([(1, 2), (2, 1)])
    assert c.total == 3
    assert str(c) == "1.2+2.1"
    assert c.values == (1, 2) and c.types == (2, 1)
    with pytest.raises(ValueError):
        GeneralizedComposition((TypedPart(1, 1),), 2)
    with pytest.raises(ValueError):
        GeneralizedComposition((), 0)


def test_order_distinguishes_compositions():
    a = GeneralizedComposition.from_pairs([(1, 1), (2, 1)])
    b = GeneralizedComposition.from_pairs([(2, 1), (1, 1)])
    assert a != b
