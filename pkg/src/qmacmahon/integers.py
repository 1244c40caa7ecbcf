"""Integer helpers shared by the series builders and the oracles."""

from __future__ import annotations

from math import comb


class IntegralityError(ArithmeticError):
    """A rational weight that must be an integer failed to divide exactly."""


def exact_div(num: int, den: int, what: str = "") -> int:
    if den == 0:
        raise IntegralityError(f"division by zero in {what or 'weight'}")
    q, r = divmod(num, den)
    if r:
        raise IntegralityError(f"{num} is not divisible by {den} ({what or 'weight'})")
    return q


def gbinomial(n: int, k: int) -> int:
    """Binomial coefficient with arbitrary integer top, zero for k < 0.

    Negative ``n`` uses upper negation: C(n, k) = (-1)^k C(k - n - 1, k).
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k)
    return (-1) ** k * comb(k - n - 1, k)


# Rational weights of the expansions.  Each is an integer; the numerator is
# formed first and the division is checked.

def ar1_weight(n: int, k: int) -> int:
    """(2n+1)/(2k+1) * C(n+k, 2k)."""
    return exact_div((2 * n + 1) * comb(n + k, 2 * k), 2 * k + 1, f"(2n+1)/(2k+1), n={n}, k={k}")


def ar2_weight(n: int, k: int) -> int:
    """2n/(n+k) * C(n+k, 2k)."""
    return exact_div(2 * n * comb(n + k, 2 * k), n + k, f"2n/(n+k), n={n}, k={k}")


def pair_weight(d: int, k: int) -> int:
    """d/k * C(d+k-1, 2k-1), with d = j - i >= k in the double sums."""
    return exact_div(d * gbinomial(d + k - 1, 2 * k - 1), k, f"(j-i)/k, j-i={d}, k={k}")
