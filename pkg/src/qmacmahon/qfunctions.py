"""q-Pochhammer products and Gaussian binomial coefficients.

Sign convention: :attr:`Sign.PLUS` always selects the upper symbol of a
printed ``±`` and therefore the lower symbol of a ``∓``.  So
``pochhammer_finite(Sign.PLUS, 1, 1, n, N)`` is ``(q;q)_n`` with factors
``(1 - q^j)``, and ``Sign.MINUS`` gives ``(-q;q)_n`` with factors ``(1 + q^j)``.
"""

from __future__ import annotations

import enum
from functools import lru_cache

from . import series as S
from .series import TruncatedSeries


class Sign(enum.Enum):
    PLUS = 1
    MINUS = -1

    @property
    def unit(self) -> int:
        """+1 for PLUS, -1 for MINUS (the value of a printed ``±1``)."""
        return self.value

    def __neg__(self) -> Sign:
        return Sign.MINUS if self is Sign.PLUS else Sign.PLUS

    @classmethod
    def parse(cls, text: str) -> Sign:
        key = text.strip().lower()
        if key in ("+", "plus", "p"):
            return cls.PLUS
        if key in ("-", "minus", "m"):
            return cls.MINUS
        raise ValueError(f"unknown sign {text!r}")

    def __str__(self) -> str:
        return "+" if self is Sign.PLUS else "-"


class QPolynomial:
    """Exact polynomial in q with integer coefficients (no truncation).

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[int, ...] = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPolynomial({list(self.coeffs)!r})"

    def __add__(self, other: QPolynomial) -> QPolynomial:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return QPolynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other: QPolynomial) -> QPolynomial:
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPolynomial(out)

    def shift(self, e: int) -> QPolynomial:
        """Multiply by q^e."""
        if not self.coeffs:
            return self
        return QPolynomial((0,) * e + self.coeffs)

    def at_one(self) -> int:
        return sum(self.coeffs)

    def to_series(self, order: int, base: int = 1) -> TruncatedSeries:
        """Truncate to a series, substituting q -> q^base."""
        cs = [0] * (order + 1)
        for e, c in enumerate(self.coeffs):
            if e * base > order:
                break
            cs[e * base] = c
        return TruncatedSeries(cs)


def binomial(n: int, k: int) -> int:
    """Ordinary binomial coefficient, zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    k = min(k, n - k)
    r = 1
    for i in range(1, k + 1):
        r = r * (n - k + i) // i
    return r


@lru_cache(maxsize=None)
def q_binomial(n: int, k: int) -> QPolynomial:
    """Gaussian binomial [n, k]_q via [n,k] = [n-1,k-1] + q^k [n-1,k]."""
    if n < 0 or k < 0 or k > n:
        return QPolynomial()
    if k == 0 or k == n:
        return QPolynomial([1])
    k = min(k, n - k)
    return q_binomial(n - 1, k - 1) + q_binomial(n - 1, k).shift(k)


def q_binomial_series(n: int, k: int, base: int, order: int) -> TruncatedSeries:
    return q_binomial(n, k).to_series(order, base)


def pochhammer_finite(sign: Sign, start: int, step: int, n: int, order: int) -> TruncatedSeries:
    """Product of (1 ∓ q^(start + j*step)) for j = 0 .. n-1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cs = [0] * (order + 1)
    cs[0] = 1
    c = -sign.unit
    for j in range(n):
        e = start + j * step
        if e > order:
            # factors beyond the order are 1 modulo q^(order+1)
            break
        for i in range(order, e - 1, -1):
            if cs[i - e]:
                cs[i] += c * cs[i - e]
    return TruncatedSeries(cs)


def pochhammer_infinite(sign: Sign, start: int, step: int, order: int) -> TruncatedSeries:
    """(∓q^start; q^step)_∞ truncated at ``order``."""
    if start < 1 or step < 1:
        raise ValueError("start and step must be positive")
    if start > order:
        return S.one(order)
    n = (order - start) // step + 1
    return pochhammer_finite(sign, start, step, n, order)
