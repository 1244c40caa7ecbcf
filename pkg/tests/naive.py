"""Slow reference routines used only as test oracles."""

from itertools import combinations


def convolve(a, b, order):
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if i + j <= order:
                out[i + j] += x * y
    return out


def product_of_binomials(exponents, sign, order):
    """prod (1 + sign*q^e) as a plain list, truncated."""
    acc = [1] + [0] * order
    for e in exponents:
        f = [0] * (order + 1)
        f[0] = 1
        if e <= order:
            f[e] += sign
        acc = convolve(acc, f, order)
    return acc


def subset_sum_poly(n, k):
    """Gaussian binomial via sum over k-subsets S of {1..n} of q^(sum S - k(k+1)/2)."""
    if k < 0 or k > n:
        return []
    coeffs = {}
    for s in combinations(range(1, n + 1), k):
        e = sum(s) - k * (k + 1) // 2
        coeffs[e] = coeffs.get(e, 0) + 1
    return [coeffs.get(e, 0) for e in range(max(coeffs) + 1)]


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def sigma1(n):
    return sum(d for d in range(1, n + 1) if n % d == 0)


def odd_divisor_weight(n):
    """sum over odd d | n of n/d."""
    return sum(n // d for d in range(1, n + 1, 2) if n % d == 0)
