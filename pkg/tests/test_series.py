import pytest
from hypothesis import given, settings, strategies as st

from qmacmahon import series as S
from qmacmahon.series import InvalidInversion, OrderMismatch, TruncatedSeries

from naive import convolve

coef = st.integers(min_value=-10**6, max_value=10**6)


@st.composite
def series_of(draw, order=None, unit=False):
    n = draw(st.integers(0, 64)) if order is None else order
    cs = draw(st.lists(coef, min_size=n + 1, max_size=n + 1))
    if unit:
        cs[0] = draw(st.sampled_from([1, -1]))
    return TruncatedSeries(cs)


@st.composite
def triples(draw):
    n = draw(st.integers(0, 64))
    return tuple(draw(series_of(order=n)) for _ in range(3))


def test_constructors():
    assert S.one(3).coeffs == (1, 0, 0, 0)
    assert S.monomial(1, 2, 4).coeffs == (0, 0, 1, 0, 0)
    assert S.monomial(5, 7, 3).coeffs == (0, 0, 0, 0)
    assert S.zero(2).coeffs == (0, 0, 0)


def test_ring_examples():
    one_plus_q = TruncatedSeries([1, 1])
    assert S.mul(one_plus_q, one_plus_q).coeffs == (1, 2)
    assert S.mul(TruncatedSeries([1, -1, 0, 0]), TruncatedSeries([1, 1, 1, 1])).coeffs == (1, 0, 0, 0)
    assert S.add(TruncatedSeries([1, 2, 3]), TruncatedSeries([0, -2, 1])).coeffs == (1, 0, 4)


def test_order_mismatch_is_an_error():
    with pytest.raises(OrderMismatch):
        S.add(S.one(2), S.one(3))
    with pytest.raises(OrderMismatch):
        S.mul(S.one(2), S.one(3))


def test_invert_examples():
    assert S.invert(TruncatedSeries([1, -1, 0, 0, 0])).coeffs == (1, 1, 1, 1, 1)
    geom = [1] * 5
    expected = convolve(geom, geom, 4)
    sq = S.pow(TruncatedSeries([1, -1, 0, 0, 0]), 2)
    assert list(S.invert(sq).coeffs) == expected == [1, 2, 3, 4, 5]
    with pytest.raises(InvalidInversion):
        S.invert(TruncatedSeries([2, 1, 0]))


def test_substitute_power_examples():
    assert S.substitute_power(TruncatedSeries([1, 1]), 2, 4).coeffs == (1, 0, 1, 0, 0)
    geom = TruncatedSeries([1] * 7)
    assert S.substitute_power(geom, 2, 6).coeffs == (1, 0, 1, 0, 1, 0, 1)
    a = TruncatedSeries([3, -1, 4, 1, -5])
    assert S.substitute_power(a, 1, a.order) == a


def test_pow_scale_prefix():
    assert S.pow(TruncatedSeries([1, 1, 0]), 2).coeffs == (1, 2, 1)
    assert S.pow(TruncatedSeries([7, 3, 2]), 0) == S.one(2)
    assert S.scale(TruncatedSeries([1, -2]), -3).coeffs == (-3, 6)
    assert S.prefix_equal(TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 2, 9]), upto=1)
    assert not S.prefix_equal(TruncatedSeries([1, 2, 3]), TruncatedSeries([1, 2, 9]), upto=2)


def test_equality_is_order_sensitive():
    assert TruncatedSeries([1, 0]) != TruncatedSeries([1, 0, 0])


def test_big_integers_are_exact():
    a = TruncatedSeries([1, 2**100, 0])
    assert S.mul(a, a)[2] == 2**200


@settings(max_examples=60, deadline=None)
@given(triples())
def test_ring_axioms(abc):
    a, b, c = abc
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * S.one(a.order) == a
    assert a - a == S.zero(a.order)


@settings(max_examples=60, deadline=None)
@given(series_of(unit=True))
def test_invert_is_inverse(a):
    assert S.mul(a, S.invert(a)) == S.one(a.order)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_truncation_coherence(data):
    n = data.draw(st.integers(1, 40))
    m = data.draw(st.integers(0, n))
    a = data.draw(series_of(order=n, unit=True))
    b = data.draw(series_of(order=n))
    am, bm = a.truncate(m), b.truncate(m)
    assert (a * b).truncate(m) == am * bm
    assert (a + b).truncate(m) == am + bm
    assert (a - b).truncate(m) == am - bm
    assert S.invert(a).truncate(m) == S.invert(am)
    assert S.pow(a, 3).truncate(m) == S.pow(am, 3)
    assert S.substitute_power(a, 2, n).truncate(m) == S.substitute_power(a, 2, m)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_substitute_power_is_homomorphism(data):
    n = data.draw(st.integers(0, 40))
    t = data.draw(st.integers(1, 4))
    a = data.draw(series_of(order=n))
    b = data.draw(series_of(order=n))
    lhs = S.substitute_power(a * b, t, n)
    rhs = S.substitute_power(a, t, n) * S.substitute_power(b, t, n)
    assert lhs == rhs


def test_mul_matches_naive_convolution():
    a = TruncatedSeries([1, -3, 0, 5, 2, 0, 0, 7])
    b = TruncatedSeries([2, 0, 0, -1, 0, 4, 1, 1])
    assert list((a * b).coeffs) == convolve(a.coeffs, b.coeffs, 7)
