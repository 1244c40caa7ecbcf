import pytest

from qmacmahon import series as S
from qmacmahon.integers import IntegralityError, ar1_weight, ar2_weight, exact_div, pair_weight
from qmacmahon.macmahon import (
    SeriesSpec,
    build_side,
    build_sides,
    macmahon,
    macmahon_A,
    macmahon_C,
    macmahon_table,
)
from qmacmahon.oracles import a_stat, c_stat, p3
from qmacmahon.qfunctions import Sign, pochhammer_finite

from naive import odd_divisor_weight, sigma1

PLUS, MINUS = Sign.PLUS, Sign.MINUS


def spec(family, sign, k, m, order):
    return SeriesSpec(family, sign, k, m, order)


def test_k_zero_convention():
    for family in "AC":
        for sign in Sign:
            for m in (1, 3, None):
                assert macmahon(spec(family, sign, 0, m, 6)) == S.one(6)


def test_k_greater_than_m_is_empty_sum():
    assert macmahon(spec("A", PLUS, 3, 2, 10)) == S.zero(10)
    assert macmahon(spec("C", MINUS, 2, 1, 10)) == S.zero(10)


def test_A1_is_sigma1():
    got = macmahon_A(spec("A", PLUS, 1, None, 6))
    assert list(got.coeffs) == [0] + [sigma1(n) for n in range(1, 7)] == [0, 1, 3, 4, 7, 6, 12]


def test_C1_is_odd_divisor_sum():
    got = macmahon_C(spec("C", PLUS, 1, None, 20))
    assert list(got.coeffs) == [0] + [odd_divisor_weight(n) for n in range(1, 21)]
    assert all(got[n] == c_stat(PLUS, 1, n) for n in range(1, 21))


def test_C11_single_part():
    assert macmahon_C(spec("C", PLUS, 1, 1, 6)).coeffs == (0, 1, 2, 3, 4, 5, 6)
    assert macmahon_A(spec("A", PLUS, 1, 1, 5)).coeffs == (0, 1, 2, 3, 4, 5)


def test_family_checks():
    with pytest.raises(ValueError):
        macmahon_A(spec("C", PLUS, 1, 1, 3))
    with pytest.raises(ValueError):
        macmahon_C(spec("A", PLUS, 1, 1, 3))
    with pytest.raises(ValueError):
        SeriesSpec("B", PLUS, 1, 1, 3)
    with pytest.raises(ValueError):
        SeriesSpec("A", PLUS, -1, 1, 3)
    with pytest.raises(ValueError):
        SeriesSpec("A", PLUS, 1, 0, 3)


def test_C_family_uses_only_odd_parts():
    # C_{1,m}^+ = sum over odd p <= 2m-1 of q^p/(1-q^p)^2
    for m in range(1, 5):
        s = macmahon_C(spec("C", PLUS, 1, m, 24))
        for n in range(1, 25):
            assert s[n] == sum(n // p for p in range(1, 2 * m, 2) if n % p == 0)


@pytest.mark.parametrize("family", "AC")
@pytest.mark.parametrize("sign", list(Sign))
def test_oracle_bridge(family, sign):
    order = 25
    stat = a_stat if family == "A" else c_stat
    for k in range(1, 5):
        s = macmahon(spec(family, sign, k, None, order))
        assert s[0] == 0
        assert [s[n] for n in range(1, order + 1)] == [stat(sign, k, n) for n in range(1, order + 1)]


@pytest.mark.parametrize("sign", list(Sign))
def test_truncation_stabilization(sign):
    order = 30
    for k in range(1, 4):
        full_a = macmahon(spec("A", sign, k, None, order))
        full_c = macmahon(spec("C", sign, k, None, order))
        for m in range(k, 12):
            assert S.prefix_equal(macmahon(spec("A", sign, k, m, order)), full_a, upto=min(m, order))
            assert S.prefix_equal(macmahon(spec("C", sign, k, m, order)), full_c, upto=min(2 * m - 1, order))


def test_tail_bound():
    order = 40
    for k in range(1, 8):
        a = macmahon(spec("A", PLUS, k, None, order))
        c = macmahon(spec("C", PLUS, k, None, order))
        assert all(a[n] == 0 for n in range(min(k * (k + 1) // 2, order + 1)))
        assert all(c[n] == 0 for n in range(min(k * k, order + 1)))
        if k * (k + 1) // 2 <= order:
            assert a[k * (k + 1) // 2] == 1
        if k * k <= order:
            assert c[k * k] == 1


def test_table_matches_single_builds():
    table = macmahon_table("A", MINUS, 4, 7, 20)
    for k in range(5):
        assert table[k] == macmahon(spec("A", MINUS, k, 7, 20))


def test_integrality_of_weights():
    for k in range(0, 9):
        for n in range(0, 61):
            ar1_weight(n, k)
            if n + k:
                ar2_weight(n, k)
    for k in range(1, 9):
        for d in range(0, 61):
            pair_weight(d, k)


def test_exact_div_raises():
    with pytest.raises(IntegralityError):
        exact_div(7, 2)
    with pytest.raises(IntegralityError):
        exact_div(1, 0)
    assert exact_div(-12, 4) == -3


def test_build_side_a1_boundary():
    for k in range(1, 5):
        order = 30
        lhs = build_side("a-1", {"k": k, "m": k, "order": order}, "lhs")
        rhs = build_side("a-1", {"k": k, "m": k, "order": order}, "rhs")
        direct = S.monomial(1, k * (k + 1) // 2, order) * S.invert(
            S.pow(pochhammer_finite(PLUS, 1, 1, k, order), 2)
        )
        assert lhs == rhs == direct


def test_build_side_m1_single_part():
    lhs = build_side("m-1", {"k": 1, "m": 1, "sign": PLUS, "order": 5}, "lhs")
    assert lhs.coeffs == (0, 1, 2, 3, 4, 5)


def test_build_side_os1_is_three_colored():
    # k = 0 so the q-power prefactor is 1
    lhs = build_side("os-1", {"k": 0, "order": 12}, "lhs")
    assert list(lhs.coeffs) == [p3(n) for n in range(13)]
    assert list(lhs.coeffs[:5]) == [1, 3, 9, 22, 51]


def test_build_side_errors():
    with pytest.raises(KeyError):
        build_side("nope", {"k": 1, "order": 3})
    with pytest.raises(ValueError):
        build_side("a-1", {"k": 1, "m": 1, "order": 3}, "middle")


def test_quotient_and_cleared_forms_agree():
    for ident in ("a-3", "m-2", "ar-2", "t3-c"):
        sides = build_sides(ident, {"k": 2, "m": 4, "sign": PLUS, "order": 30})
        l, r = sides.cleared()
        assert (sides.lhs() == sides.rhs()) == (l == r) is True
