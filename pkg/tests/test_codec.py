import pytest
from hypothesis import given, strategies as st

from ndes.codec import (
    CartesianIndex,
    IndexParseError,
    ScalarIndex,
    cartesian_prefix,
    deinterleave,
    format_cartesian,
    format_scalar,
    format_scalar_values,
    interleave,
    parse_cartesian,
    parse_scalar,
    scalar_prefix,
)
from ndes.scale import Scale, ScaleError, to_digits

Q = Scale(2, 2)
OCT4 = Scale(3, 4)


def test_interleave_quadtree_example():
    c = parse_cartesian("011,001", Q)
    x = interleave(c, Q)
    assert format_scalar(x, Q) == "00 10 11"
    assert deinterleave(x, Q) == c
    assert c.values(Q) == (3, 1)


def test_interleave_octree_radix4_example():
    c = CartesianIndex.from_values((12, 15, 6), 3, OCT4)
    assert format_cartesian(c, OCT4) == "030,033,012"
    x = interleave(c, OCT4)
    assert x.values(OCT4) == (0, 61, 14)
    assert format_scalar(x, OCT4) == "000 331 032"
    assert deinterleave(ScalarIndex.from_values((0, 61, 14), OCT4), OCT4).values(OCT4) == (12, 15, 6)


def test_origin():
    s = Scale(3, 5)
    c = CartesianIndex.from_values((0, 0, 0), 4, s)
    assert interleave(c, s).values(s) == (0, 0, 0, 0)
    assert deinterleave(ScalarIndex(((0, 0, 0),)), s) == CartesianIndex(1, ((0,), (0,), (0,)))


def test_interleave_errors():
    with pytest.raises(ScaleError):
        interleave(CartesianIndex(1, ((2,), (0,))), Q)
    with pytest.raises(ScaleError):
        interleave(CartesianIndex(1, ((1,),)), Q)
    with pytest.raises(ScaleError):
        deinterleave(ScalarIndex(((0, 3),)), Q)


def test_cartesian_prefix_level8():
    c = parse_cartesian("01101101,00110011", Q)
    # oracle: go through the scalar side and keep three matrix digits
    kept = ScalarIndex(interleave(c, Q).digits[:3])
    expected = deinterleave(kept, Q)
    got = cartesian_prefix(c, 3)
    assert got == expected
    assert format_cartesian(got, Q) == "011,001"
    assert cartesian_prefix(c, 8) == c
    assert cartesian_prefix(c, 0).level == 0
    with pytest.raises(ScaleError):
        cartesian_prefix(c, 9)


def test_scalar_prefix():
    x = parse_scalar("00 10 11", Q)
    assert format_scalar(scalar_prefix(x, 2), Q) == "00 10"
    assert scalar_prefix(x, 0) == ScalarIndex(())
    y = ScalarIndex.from_values((0, 61, 14), OCT4)
    assert scalar_prefix(y, 1).values(OCT4) == (0,)
    with pytest.raises(ScaleError):
        scalar_prefix(x, 4)


def test_text_forms():
    assert parse_scalar("0 [61] [14]", OCT4).values(OCT4) == (0, 61, 14)
    assert format_scalar_values(parse_scalar("000 331 032", OCT4), OCT4) == "0 [61] [14]"
    assert parse_scalar("021", Scale(1, 4)).values(Scale(1, 4)) == (0, 2, 1)
    assert parse_scalar("0[12]3", Scale(1, 16)).values(Scale(1, 16)) == (0, 12, 3)
    assert parse_cartesian("3,1", Q, level=3) == parse_cartesian("011,001", Q)
    assert parse_scalar("-", Q).level == 0


@pytest.mark.parametrize(
    "text, parse",
    [
        ("00 12 11", parse_scalar),
        ("000 10", parse_scalar),
        ("[4]", parse_scalar),
        ("011,021", parse_cartesian),
        ("011,01", parse_cartesian),
        ("011", parse_cartesian),
    ],
)
def test_parse_errors_name_the_digit(text, parse):
    with pytest.raises(IndexParseError):
        parse(text, Q)


def test_parse_error_message_names_offending_digit():
    with pytest.raises(IndexParseError, match="'2'"):
        parse_scalar("00 12 11", Q)


def test_decimal_coordinate_out_of_range():
    with pytest.raises(IndexParseError):
        parse_cartesian("8,1", Q, level=3)


@st.composite
def cartesian(draw):
    s = Scale(draw(st.integers(1, 4)), draw(st.sampled_from([2, 3, 4, 5, 8, 10, 16])))
    level = draw(st.integers(0, 8))
    coords = draw(st.tuples(*[st.lists(st.integers(0, s.radix - 1), min_size=level, max_size=level)] * s.dim))
    return s, CartesianIndex(level, coords)


@given(cartesian())
def test_roundtrip_and_prefix_commutation(case):
    s, c = case
    x = interleave(c, s)
    assert deinterleave(x, s) == c
    assert interleave(deinterleave(x, s), s) == x
    for t in range(c.level + 1):
        assert scalar_prefix(x, t) == interleave(cartesian_prefix(c, t), s)


@given(st.sampled_from([2, 3, 4, 10, 16]), st.integers(0, 8), st.data())
def test_one_dimension_scalar_equals_cartesian(radix, level, data):
    s = Scale(1, radix)
    v = data.draw(st.integers(0, radix**level - 1))
    x = interleave(CartesianIndex.from_values((v,), level, s), s)
    assert list(x.values(s)) == to_digits(v, radix, level)


@given(st.sampled_from([Scale(2, 2), Scale(2, 3), Scale(3, 2)]), st.integers(1, 3))
def test_scalar_order_matches_depth_first_order(s, level):
    # depth-first enumeration of a complete tree, independent of the codec
    def dfs(prefix, k):
        if k == 0:
            yield tuple(prefix)
            return
        for v in range(s.order):
            yield from dfs(prefix + [v], k - 1)

    visits = list(dfs([], level))
    side = s.radix**level
    indices = []
    for flat in range(side**s.dim):
        coords = to_digits(flat, side, s.dim)
        indices.append(interleave(CartesianIndex.from_values(coords, level, s), s))
    assert [x.values(s) for x in sorted(indices)] == visits
