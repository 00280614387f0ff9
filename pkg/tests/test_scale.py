import pytest
from hypothesis import given, strategies as st

from ndes.scale import Scale, ScaleError, digit_from_value, digit_value, make_scale


def test_make_scale_orders():
    assert make_scale(2, 2, 3).order == 4
    assert make_scale(3, 4, 3).order == 64
    s = make_scale(1, 2, 0)
    assert s.depth == 0 and s.points_at(s.depth) == 1


@pytest.mark.parametrize("args", [(0, 2, 1), (1, 1, 1), (2, 2, -1), (2, 2, None)])
def test_make_scale_rejects(args):
    with pytest.raises(ScaleError):
        make_scale(*args)


def test_digit_value_examples():
    assert digit_value((3, 3, 1), Scale(3, 4)) == 61
    assert digit_value((0, 0), Scale(2, 2)) == 0
    assert digit_value((1, 1), Scale(2, 2)) == 3


def test_digit_from_value_examples():
    assert digit_from_value(61, Scale(3, 4)) == (3, 3, 1)
    assert digit_from_value(14, Scale(3, 4)) == (0, 3, 2)
    assert digit_from_value(0, Scale(4, 5)) == (0, 0, 0, 0)


def test_digit_errors():
    with pytest.raises(ScaleError):
        digit_value((4, 0, 0), Scale(3, 4))
    with pytest.raises(ScaleError):
        digit_value((1,), Scale(2, 2))
    with pytest.raises(ScaleError):
        digit_from_value(64, Scale(3, 4))


scales = st.builds(Scale, st.integers(1, 4), st.integers(2, 16))


@given(scales, st.data())
def test_digit_roundtrip(s, data):
    v = data.draw(st.integers(0, s.order - 1))
    assert digit_value(digit_from_value(v, s), s) == v
    d = data.draw(st.tuples(*[st.integers(0, s.radix - 1)] * s.dim))
    assert digit_from_value(digit_value(d, s), s) == d


@given(scales, st.data())
def test_digit_value_lexicographic(s, data):
    axis = st.tuples(*[st.integers(0, s.radix - 1)] * s.dim)
    a, b = data.draw(axis), data.draw(axis)
    assert (a < b) == (digit_value(a, s) < digit_value(b, s))
