"""MacMahon-type series A_{k,m}^±, C_{k,m}^± and the two sides of each identity.

A part λ contributes ``q^p / (1 ∓ q^p)^2 = Σ_{t≥1} (±1)^(t+1) t q^(p t)``
with ``p = λ`` for family A and ``p = 2λ - 1`` for family C.  The truncated
series are built by a dynamic program over λ = 1..m whose state is the number
of parts chosen so far; one pass yields every k up to the requested one.

Sign pairing (checked numerically, see :func:`qmacmahon.identities.pairing_check`):
within one identity the upper symbols go together.  A^+ / C^+ pair with
(q;q)_m^2 / (q;q^2)_m^2 and a factor (-1)^(...); A^- / C^- pair with
(-q;q)_m^2 / (-q;q^2)_m^2 and (+1)^(...).  The printed (±1)^(j-k) of the
C-family binomial sum takes the upper symbol: +1 for C^+, -1 for C^-.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Callable

from . import series as S
from .integers import ar1_weight, ar2_weight, pair_weight
from .qfunctions import Sign, pochhammer_finite, pochhammer_infinite, q_binomial
from .series import TruncatedSeries

INFINITE = None


@dataclass(frozen=True)
class SeriesSpec:
    family: str  # "A" or "C"
    sign: Sign
    k: int
    m: int | None  # None means the limiting series m -> infinity
    order: int

    def __post_init__(self):
        if self.family not in ("A", "C"):
            raise ValueError(f"family must be 'A' or 'C', got {self.family!r}")
        if self.k < 0:
            raise ValueError("k must be non-negative")
        if self.m is not None and self.m < 1:
            raise ValueError("m must be positive or infinite")
        if self.order < 0:
            raise ValueError("order must be non-negative")

    @property
    def effective_m(self) -> int:
        """Largest part index that can touch a coefficient of index <= order."""
        if self.family == "A":
            bound = self.order
        else:
            bound = (self.order + 1) // 2
        return bound if self.m is None else min(self.m, bound)


def part_size(family: str, lam: int) -> int:
    return lam if family == "A" else 2 * lam - 1


def minimal_exponent(family: str, k: int) -> int:
    """Lowest power of q that can occur in the k-part series."""
    return k * (k + 1) // 2 if family == "A" else k * k


@lru_cache(maxsize=512)
def _table(family: str, sign: Sign, kmax: int, m_eff: int, order: int) -> tuple[TruncatedSeries, ...]:
    states = [[0] * (order + 1) for _ in range(kmax + 1)]
    states[0][0] = 1
    u = sign.unit
    for lam in range(1, m_eff + 1):
        p = part_size(family, lam)
        if p > order:
            break
        # factor coefficients at exponents p*t
        factor = [(p * t, (u ** (t + 1)) * t) for t in range(1, order // p + 1)]
        for c in range(min(kmax, lam), 0, -1):
            src = states[c - 1]
            dst = states[c]
            lo = minimal_exponent(family, c - 1)
            for e in range(lo, order + 1):
                x = src[e]
                if not x:
                    continue
                for shift, w in factor:
                    if e + shift > order:
                        break
                    dst[e + shift] += x * w
    return tuple(TruncatedSeries(s) for s in states)


def macmahon_table(family: str, sign: Sign, kmax: int, m: int | None, order: int) -> tuple[TruncatedSeries, ...]:
    """Series for k = 0..kmax at one (family, sign, m, order) in a single pass.

    Entries with k > m (finite m) are the zero series.
    """
    spec = SeriesSpec(family, sign, 0, m, order)
    return _table(family, sign, kmax, spec.effective_m, order)


def macmahon(spec: SeriesSpec) -> TruncatedSeries:
    if spec.k == 0:
        return S.one(spec.order)
    if spec.m is not None and spec.k > spec.m:
        return S.zero(spec.order)
    return macmahon_table(spec.family, spec.sign, spec.k, spec.m, spec.order)[spec.k]


def macmahon_A(spec: SeriesSpec) -> TruncatedSeries:
    if spec.family != "A":
        raise ValueError("macmahon_A needs family A")
    return macmahon(spec)


def macmahon_C(spec: SeriesSpec) -> TruncatedSeries:
    if spec.family != "C":
        raise ValueError("macmahon_C needs family C")
    return macmahon(spec)


def A(sign: Sign, k: int, m: int | None, order: int) -> TruncatedSeries:
    return macmahon(SeriesSpec("A", sign, k, m, order))


def C(sign: Sign, k: int, m: int | None, order: int) -> TruncatedSeries:
    return macmahon(SeriesSpec("C", sign, k, m, order))


# ---------------------------------------------------------------------------
# identity sides
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Sides:
    """Both sides of an identity as numerator/denominator pairs.

    Denominators have constant term 1, so the quotient form is exact.  The
    cleared form multiplies each numerator by the other side's denominator.
    """

    lhs_num: TruncatedSeries
    lhs_den: TruncatedSeries
    rhs_num: TruncatedSeries
    rhs_den: TruncatedSeries

    def lhs(self) -> TruncatedSeries:
        return self.lhs_num * S.invert(self.lhs_den)

    def rhs(self) -> TruncatedSeries:
        return self.rhs_num * S.invert(self.rhs_den)

    def cleared(self) -> tuple[TruncatedSeries, TruncatedSeries]:
        return self.lhs_num * self.rhs_den, self.rhs_num * self.lhs_den


def _sides(lhs, rhs, lhs_den=None, rhs_den=None) -> Sides:
    order = lhs.order
    return Sides(
        lhs,
        S.one(order) if lhs_den is None else lhs_den,
        rhs,
        S.one(order) if rhs_den is None else rhs_den,
    )


def _poly_term(poly, coeff: int, shift: int, base: int, order: int, acc: list[int]) -> None:
    """acc += coeff * q^shift * poly(q^base), truncated."""
    if shift > order or coeff == 0:
        return
    for e, c in enumerate(poly.coeffs):
        x = shift + base * e
        if x > order:
            break
        if c:
            acc[x] += coeff * c


def _inv_qfact(i: int, base: int, order: int) -> TruncatedSeries:
    """1 / (q^base; q^base)_i."""
    return S.invert(pochhammer_finite(Sign.PLUS, base, base, i, order))


def ar_1(k, m, sign, order):
    lhs = A(Sign.PLUS, k, None, order)
    terms = {}
    n = k
    while n * (n + 1) // 2 <= order:
        terms[n * (n + 1) // 2] = (-1) ** (n - k) * ar1_weight(n, k)
        n += 1
    den = S.pow(pochhammer_infinite(Sign.PLUS, 1, 1, order), 3)
    return _sides(lhs, S.from_sparse(terms, order), rhs_den=den)


def ar_2(k, m, sign, order):
    lhs = C(Sign.PLUS, k, None, order)
    terms = {}
    n = k
    while n * n <= order:
        terms[n * n] = (-1) ** (n - k) * ar2_weight(n, k)
        n += 1
    num = pochhammer_infinite(Sign.MINUS, 1, 1, order) * S.from_sparse(terms, order)
    return _sides(lhs, num, rhs_den=pochhammer_infinite(Sign.PLUS, 1, 1, order))


def os_1(k, m, sign, order):
    # multiplied through by q^(k(k+1)/2)
    lhs_num = S.monomial(1, k * (k + 1) // 2, order)
    lhs_den = S.pow(pochhammer_infinite(Sign.PLUS, 1, 1, order), 3)
    top = k
    while minimal_exponent("A", top + 1) <= order:
        top += 1
    table = macmahon_table("A", Sign.PLUS, top, None, order)
    rhs = S.series_sum((comb(2 * j + 1, j + k + 1) * table[j] for j in range(k, top + 1)), order)
    return _sides(lhs_num, rhs, lhs_den=lhs_den)


def os_2(k, m, sign, order):
    # multiplied through by q^(k^2)
    lhs_num = S.monomial(1, k * k, order) * pochhammer_infinite(Sign.MINUS, 1, 1, order)
    lhs_den = pochhammer_infinite(Sign.PLUS, 1, 1, order)
    top = k
    while minimal_exponent("C", top + 1) <= order:
        top += 1
    table = macmahon_table("C", Sign.PLUS, top, None, order)
    rhs = S.series_sum((comb(2 * j, j + k) * table[j] for j in range(k, top + 1)), order)
    return _sides(lhs_num, rhs, lhs_den=lhs_den)


def a_1(k, m, sign, order):
    table = macmahon_table("A", Sign.PLUS, m, m, order)
    lhs = S.series_sum((comb(2 * j + 1, j + k + 1) * table[j] for j in range(k, m + 1)), order)
    acc = [0] * (order + 1)
    _poly_term(q_binomial(2 * m + 1, m + k + 1), 1, k * (k + 1) // 2, 1, order, acc)
    den = S.pow(pochhammer_finite(Sign.PLUS, 1, 1, m, order), 2)
    return _sides(lhs, S.TruncatedSeries(acc), rhs_den=den)


def a_2(k, m, sign, order, factor_sign=None):
    u = (factor_sign or sign).unit
    table = macmahon_table("C", sign, m, m, order)
    lhs = S.series_sum((u ** (j - k) * comb(2 * j, j + k) * table[j] for j in range(k, m + 1)), order)
    acc = [0] * (order + 1)
    _poly_term(q_binomial(2 * m, m + k), 1, k * k, 2, order, acc)
    den = S.pow(pochhammer_finite(sign, 1, 2, m, order), 2)
    return _sides(lhs, S.TruncatedSeries(acc), rhs_den=den)


def a_3(k, m, sign, order):
    lhs = A(Sign.PLUS, k, m, order)
    acc = [0] * (order + 1)
    for j in range(k, m + 1):
        w = (-1) ** (j - k) * ar1_weight(j, k)
        _poly_term(q_binomial(2 * m + 1, m + j + 1), w, j * (j + 1) // 2, 1, order, acc)
    den = S.pow(pochhammer_finite(Sign.PLUS, 1, 1, m, order), 2)
    return _sides(lhs, S.TruncatedSeries(acc), rhs_den=den)


def a_4(k, m, sign, order, factor_sign=None):
    lhs = C(sign, k, m, order)
    v = -(factor_sign or sign).unit  # the printed (∓1)
    acc = [0] * (order + 1)
    for j in range(k, m + 1):
        w = v ** (j - k) * ar2_weight(j, k)
        _poly_term(q_binomial(2 * m, m + j), w, j * j, 2, order, acc)
    den = S.pow(pochhammer_finite(sign, 1, 2, m, order), 2)
    return _sides(lhs, S.TruncatedSeries(acc), rhs_den=den)


def _double_sum_finite(k, m, v, base, order):
    """Σ_i Σ_j v^(j-i-k) w(j-i) [m,i][m,j] q^(e_i + e_j) over q^base binomials."""
    fam = "A" if base == 1 else "C"
    acc = [0] * (order + 1)
    for i in range(0, m - k + 1):
        ei = minimal_exponent(fam, i)
        if ei > order:
            break
        bi = q_binomial(m, i)
        for j in range(i + k, m + 1):
            ej = minimal_exponent(fam, j)
            if ei + ej > order:
                break
            w = v ** (j - i - k) * pair_weight(j - i, k)
            prod = bi * q_binomial(m, j)
            _poly_term(prod, w, ei + ej, base, order, acc)
    return S.TruncatedSeries(acc)


def m_1(k, m, sign, order, factor_sign=None):
    lhs = A(sign, k, m, order)
    rhs = _double_sum_finite(k, m, -(factor_sign or sign).unit, 1, order)
    den = S.pow(pochhammer_finite(sign, 1, 1, m, order), 2)
    return _sides(lhs, rhs, rhs_den=den)


def m_2(k, m, sign, order, factor_sign=None):
    lhs = C(sign, k, m, order)
    rhs = _double_sum_finite(k, m, -(factor_sign or sign).unit, 2, order)
    den = S.pow(pochhammer_finite(sign, 1, 2, m, order), 2)
    return _sides(lhs, rhs, rhs_den=den)


def _double_sum_infinite(k, v, base, order):
    """Σ_{i>=0} Σ_{j>=i+k} v^(j-i-k) w(j-i) q^(e_i+e_j) / ((q^b;q^b)_i (q^b;q^b)_j)."""
    fam = "A" if base == 1 else "C"
    inv = {}

    def inv_fact(i):
        if i not in inv:
            inv[i] = _inv_qfact(i, base, order)
        return inv[i]

    terms = []
    i = 0
    while minimal_exponent(fam, i) + minimal_exponent(fam, i + k) <= order:
        ei = minimal_exponent(fam, i)
        j = i + k
        while ei + minimal_exponent(fam, j) <= order:
            w = v ** (j - i - k) * pair_weight(j - i, k)
            mono = S.monomial(w, ei + minimal_exponent(fam, j), order)
            terms.append(mono * inv_fact(i) * inv_fact(j))
            j += 1
        i += 1
    return S.series_sum(terms, order)


def m_3(k, m, sign, order, factor_sign=None):
    lhs = A(sign, k, None, order)
    rhs = _double_sum_infinite(k, -(factor_sign or sign).unit, 1, order)
    den = S.pow(pochhammer_infinite(sign, 1, 1, order), 2)
    return _sides(lhs, rhs, rhs_den=den)


def m_4(k, m, sign, order, factor_sign=None):
    lhs = C(sign, k, None, order)
    rhs = _double_sum_infinite(k, -(factor_sign or sign).unit, 2, order)
    den = S.pow(pochhammer_infinite(sign, 1, 2, order), 2)
    return _sides(lhs, rhs, rhs_den=den)


def t3_a(k, m, sign, order):
    terms = {}
    n = k
    while n * (n + 1) // 2 <= order:
        terms[n * (n + 1) // 2] = (-1) ** (n - k) * ar1_weight(n, k)
        n += 1
    lhs_den = pochhammer_infinite(Sign.PLUS, 1, 1, order)
    rhs = _double_sum_infinite(k, -1, 1, order)
    return _sides(S.from_sparse(terms, order), rhs, lhs_den=lhs_den)


def t3_c(k, m, sign, order):
    terms = {}
    n = k
    while n * n <= order:
        terms[n * n] = (-1) ** (n - k) * ar2_weight(n, k)
        n += 1
    lhs_den = pochhammer_infinite(Sign.PLUS, 2, 2, order)
    rhs = _double_sum_infinite(k, -1, 2, order)
    return _sides(S.from_sparse(terms, order), rhs, lhs_den=lhs_den)


SIDE_BUILDERS: dict[str, Callable[..., Sides]] = {
    "ar-1": ar_1,
    "ar-2": ar_2,
    "os-1": os_1,
    "os-2": os_2,
    "a-1": a_1,
    "a-2": a_2,
    "a-3": a_3,
    "a-4": a_4,
    "m-1": m_1,
    "m-2": m_2,
    "m-3": m_3,
    "m-4": m_4,
    "t3-a": t3_a,
    "t3-c": t3_c,
}


def build_sides(identity_id: str, params: dict) -> Sides:
    try:
        builder = SIDE_BUILDERS[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity {identity_id!r}") from None
    sign = params.get("sign", Sign.PLUS)
    extra = {}
    if params.get("factor_sign") is not None:
        extra["factor_sign"] = params["factor_sign"]
    return builder(params.get("k", 0), params.get("m"), sign, params["order"], **extra)


def build_side(identity_id: str, params: dict, side: str = "lhs") -> TruncatedSeries:
    """Quotient form of one side of a registered series identity."""
    sides = build_sides(identity_id, params)
    if side == "lhs":
        return sides.lhs()
    if side == "rhs":
        return sides.rhs()
    raise ValueError(f"side must be 'lhs' or 'rhs', got {side!r}")
