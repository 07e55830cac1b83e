from hypothesis import given, strategies as st

from relaus.values import INF, AtLeast, at_least, at_most, decode, encode, vadd, vmax, vmin

values = st.one_of(st.integers(0, 50), st.just(INF), st.integers(0, 50).map(AtLeast))


def test_encode():
    assert encode(3) == 3
    assert encode(INF) == "inf"
    assert encode(AtLeast(64)) == ">=64"


@given(values)
def test_encode_roundtrip(v):
    assert decode(encode(v)) == v


def test_comparisons():
    assert at_least(INF, 100) is True
    assert at_least(AtLeast(5), 3) is True
    assert at_least(AtLeast(5), 9) is None
    assert at_most(2, 2) is True
    assert at_most(INF, 2) is False


def test_arithmetic():
    assert vadd(2, 3) == 5
    assert vadd(2, INF) is INF
    assert vmin(3, INF) == 3
    assert vmax(3, INF) is INF


@given(st.integers(0, 20), st.integers(0, 20))
def test_vmin_ints(a, b):
    assert vmin(a, b) == min(a, b)
    assert vmax(a, b) == max(a, b)
