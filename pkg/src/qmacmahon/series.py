"""Truncated formal power series over the integers.

A :class:`TruncatedSeries` of order ``N`` stores the coefficients of
``q^0 .. q^N`` exactly; everything above ``q^N`` is discarded.  Values are
immutable and every operation returns a new series.
"""

from __future__ import annotations

from typing import Iterable, Sequence


class OrderMismatch(ValueError):
    """Two series of different truncation orders were combined."""


class InvalidInversion(ArithmeticError):
    """The constant term is not a unit of Z, so no integral inverse exists."""


class TruncatedSeries:
    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[int], order: int | None = None):
        cs = [int(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be non-negative")
            cs = cs[: order + 1] + [0] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self._coeffs

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError("negative exponent")
        return self._coeffs[n] if n <= self.order else 0

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self._coeffs)!r})"

    def __str__(self) -> str:
        terms = []
        for e, c in enumerate(self._coeffs):
            if c == 0:
                continue
            if e == 0:
                terms.append(str(c))
            else:
                mono = "q" if e == 1 else f"q^{e}"
                coef = "" if c == 1 else "-" if c == -1 else f"{c}*"
                terms.append(coef + mono)
        body = " + ".join(terms).replace("+ -", "- ") if terms else "0"
        return f"{body} + O(q^{self.order + 1})"

    def __add__(self, other):
        return add(self, other)

    def __sub__(self, other):
        return sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __neg__(self):
        return scale(self, -1)

    def __pow__(self, e: int):
        return pow(self, e)

    def truncate(self, order: int) -> TruncatedSeries:
        """Return the prefix of this series up to ``q^order``."""
        if order > self.order:
            raise OrderMismatch(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self._coeffs[: order + 1])

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero coefficient, None for zero."""
        for e, c in enumerate(self._coeffs):
            if c:
                return e
        return None


def zero(order: int) -> TruncatedSeries:
    return TruncatedSeries([0] * (order + 1))


def one(order: int) -> TruncatedSeries:
    return monomial(1, 0, order)


def monomial(c: int, e: int, order: int) -> TruncatedSeries:
    if e < 0 or order < 0:
        raise ValueError("exponent and order must be non-negative")
    cs = [0] * (order + 1)
    if e <= order:
        cs[e] = c
    return TruncatedSeries(cs)


def from_sparse(terms: dict[int, int], order: int) -> TruncatedSeries:
    """Build a series from an exponent -> coefficient map, dropping high terms."""
    cs = [0] * (order + 1)
    for e, c in terms.items():
        if 0 <= e <= order:
            cs[e] += c
    return TruncatedSeries(cs)


def _check(a: TruncatedSeries, b: TruncatedSeries) -> int:
    if a.order != b.order:
        raise OrderMismatch(f"order {a.order} vs {b.order}")
    return a.order


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check(a, b)
    return TruncatedSeries([x + y for x, y in zip(a.coeffs, b.coeffs)])


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    _check(a, b)
    return TruncatedSeries([x - y for x, y in zip(a.coeffs, b.coeffs)])


def scale(a: TruncatedSeries, c: int) -> TruncatedSeries:
    return TruncatedSeries([c * x for x in a.coeffs])


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product, discarding exponents above the common order."""
    n = _check(a, b)
    ac, bc = a.coeffs, b.coeffs
    # iterate over the sparser operand's nonzero terms
    if sum(1 for x in ac if x) > sum(1 for x in bc if x):
        ac, bc = bc, ac
    out = [0] * (n + 1)
    for i, x in enumerate(ac):
        if not x:
            continue
        for j in range(n - i + 1):
            y = bc[j]
            if y:
                out[i + j] += x * y
    return TruncatedSeries(out)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series whose constant term is +1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise InvalidInversion(f"constant term {c0} is not a unit in Z")
    n = a.order
    ac = a.coeffs
    nz = [(i, x) for i, x in enumerate(ac) if i and x]
    b = [0] * (n + 1)
    b[0] = c0
    for k in range(1, n + 1):
        s = 0
        for i, x in nz:
            if i > k:
                break
            s += x * b[k - i]
        # c0 is its own inverse
        b[k] = -c0 * s
    return TruncatedSeries(b)


def substitute_power(a: TruncatedSeries, t: int, order: int) -> TruncatedSeries:
    """Return a(q^t) truncated at ``order``."""
    if t < 1:
        raise ValueError("substitution power must be positive")
    cs = [0] * (order + 1)
    for n, c in enumerate(a.coeffs):
        e = n * t
        if e > order:
            break
        cs[e] = c
    return TruncatedSeries(cs)


def pow(a: TruncatedSeries, e: int) -> TruncatedSeries:  # noqa: A001
    if e < 0:
        raise ValueError("negative powers need invert()")
    result = one(a.order)
    base = a
    while e:
        if e & 1:
            result = mul(result, base)
        e >>= 1
        if e:
            base = mul(base, base)
    return result


def prefix_equal(a: TruncatedSeries, b: TruncatedSeries, upto: int) -> bool:
    if upto > min(a.order, b.order):
        raise OrderMismatch(f"prefix {upto} exceeds order {min(a.order, b.order)}")
    return a.coeffs[: upto + 1] == b.coeffs[: upto + 1]


def first_difference(a: Sequence[int], b: Sequence[int]) -> int | None:
    """Index of the first position where two coefficient lists differ."""
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def series_sum(terms: Iterable[TruncatedSeries], order: int) -> TruncatedSeries:
    acc = [0] * (order + 1)
    for t in terms:
        if t.order != order:
            raise OrderMismatch(f"order {t.order} vs {order}")
        for i, c in enumerate(t.coeffs):
            if c:
                acc[i] += c
    return TruncatedSeries(acc)
