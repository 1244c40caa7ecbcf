"""Brute-force partition statistics.

These are the independent checks for the series coefficients, so nothing
here touches the series ring: every count comes from walking the partitions
themselves.  Enumeration is exponential in n; the public counting functions
refuse ``n > limit`` (default 40) unless the caller raises the limit.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product
from math import comb, prod
from typing import Iterator

from .integers import exact_div, gbinomial

SOFT_LIMIT = 40


class OracleLimitError(ValueError):
    """Requested n is beyond the soft guard for exponential enumeration."""


def _guard(n: int, limit: int | None) -> None:
    limit = SOFT_LIMIT if limit is None else limit
    if n > limit:
        raise OracleLimitError(f"n={n} exceeds the enumeration guard {limit}; raise the limit to force it")


@dataclass(frozen=True, order=True)
class PartitionMultiset:
    """A partition stored as sorted (part, multiplicity) pairs."""

    items: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for part, mult in self.items:
            if part < 1 or mult < 1:
                raise ValueError(f"invalid part/multiplicity {part}/{mult}")

    @classmethod
    def from_parts(cls, parts) -> PartitionMultiset:
        counts: dict[int, int] = {}
        for p in parts:
            counts[p] = counts.get(p, 0) + 1
        return cls(tuple(sorted(counts.items())))

    @classmethod
    def from_map(cls, parts: dict[int, int]) -> PartitionMultiset:
        return cls(tuple(sorted((p, t) for p, t in parts.items() if t)))

    @property
    def parts(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def weight(self) -> int:
        return sum(p * t for p, t in self.items)

    @property
    def distinct_sizes(self) -> int:
        return len(self.items)

    @property
    def num_parts(self) -> int:
        return sum(t for _, t in self.items)

    def multiplicity(self, part: int) -> int:
        return self.parts.get(part, 0)

    def as_list(self) -> list[int]:
        return [p for p, t in self.items for _ in range(t)]

    def __str__(self) -> str:
        return "+".join(map(str, self.as_list())) or "0"


def _descend(n: int, top: int, odd_only: bool, max_mult: int | None) -> Iterator[list[tuple[int, int]]]:
    if n == 0:
        yield []
        return
    for part in range(min(top, n), 0, -1):
        if odd_only and part % 2 == 0:
            continue
        most = n // part
        if max_mult is not None:
            most = min(most, max_mult)
        for t in range(most, 0, -1):
            for rest in _descend(n - part * t, part - 1, odd_only, max_mult):
                yield rest + [(part, t)]


@lru_cache(maxsize=4096)
def _enumerate(n, max_part, odd_only, max_mult, distinct_sizes) -> tuple[PartitionMultiset, ...]:
    top = n if max_part is None else max_part
    out = []
    for items in _descend(n, top, odd_only, max_mult):
        if distinct_sizes is not None and len(items) != distinct_sizes:
            continue
        out.append(PartitionMultiset(tuple(items)))
    return tuple(out)


def enumerate_partitions(
    n: int,
    max_part: int | None = None,
    odd_only: bool = False,
    max_multiplicity: int | None = None,
    distinct_sizes: int | None = None,
) -> list[PartitionMultiset]:
    """All partitions of n meeting the constraints, each exactly once."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate(n, max_part, odd_only, max_multiplicity, distinct_sizes))


def _signed_weight(sign: int, p: PartitionMultiset) -> int:
    # (±1)^(t_1 + ... + t_k + k) * t_1 ... t_k
    mults = [t for _, t in p.items]
    return sign ** (sum(mults) + len(mults)) * prod(mults)


def a_stat(sign, k: int, n: int, limit: int | None = None) -> int:
    """Signed sum of multiplicity products over partitions with k distinct sizes."""
    _guard(n, limit)
    u = getattr(sign, "unit", sign)
    return sum(_signed_weight(u, p) for p in enumerate_partitions(n, distinct_sizes=k))


def c_stat(sign, k: int, n: int, limit: int | None = None) -> int:
    """As :func:`a_stat` but over partitions into odd parts only."""
    _guard(n, limit)
    u = getattr(sign, "unit", sign)
    return sum(_signed_weight(u, p) for p in enumerate_partitions(n, odd_only=True, distinct_sizes=k))


def p3(n: int, limit: int | None = None) -> int:
    """Number of 3-colored partitions of n.

    t copies of one part size can be colored in C(t+2, 2) ways.
    """
    _guard(n, limit)
    return sum(prod(comb(t + 2, 2) for _, t in p.items) for p in enumerate_partitions(n))


def overpartition_count(n: int, limit: int | None = None) -> int:
    """Number of overpartitions of n: each distinct size may be overlined once."""
    _guard(n, limit)
    return sum(2 ** p.distinct_sizes for p in enumerate_partitions(n))


def in_P(p: PartitionMultiset, m: int, l: int) -> bool:
    """Parts <= m, multiplicities <= 2, exactly l sizes of multiplicity 1."""
    return (
        all(part <= m and t <= 2 for part, t in p.items)
        and sum(1 for _, t in p.items if t == 1) == l
    )


def in_Q(p: PartitionMultiset, m: int, s: int, t: int) -> bool:
    """Parts <= m, multiplicities <= 2, s parts in total, t sizes doubled."""
    return (
        all(part <= m and mult <= 2 for part, mult in p.items)
        and p.num_parts == s
        and sum(1 for _, mult in p.items if mult == 2) == t
    )


def _two_bounded(n: int, m: int) -> list[PartitionMultiset]:
    return enumerate_partitions(n, max_part=m, max_multiplicity=2)


def P_members(m: int, l: int, n: int) -> list[PartitionMultiset]:
    return [p for p in _two_bounded(n, m) if in_P(p, m, l)]


def Q_members(m: int, s: int, t: int, n: int) -> list[PartitionMultiset]:
    return [p for p in _two_bounded(n, m) if in_Q(p, m, s, t)]


def P_count(m: int, l: int, n: int, limit: int | None = None) -> int:
    _guard(n, limit)
    if min(m, l, n) < 0:
        return 0
    return len(P_members(m, l, n))


def Q_count(m: int, s: int, t: int, n: int, limit: int | None = None) -> int:
    _guard(n, limit)
    if min(m, s, t, n) < 0:
        return 0
    return len(Q_members(m, s, t, n))


@dataclass(frozen=True)
class DecompositionA:
    """n = (λ_1 + ... + λ_k) + (x_1 α_1 + ... + x_j α_j) with disjoint sets."""

    lambda_set: tuple[int, ...]
    alpha_set: tuple[int, ...]
    x: tuple[int, ...]

    @property
    def ones(self) -> int:
        """Number of x_d equal to 1."""
        return sum(1 for v in self.x if v == 1)

    @property
    def total(self) -> int:
        return sum(self.lambda_set) + sum(a * v for a, v in zip(self.alpha_set, self.x))

    def multiset(self) -> PartitionMultiset:
        counts = {lam: 1 for lam in self.lambda_set}
        for a, v in zip(self.alpha_set, self.x):
            counts[a] = counts.get(a, 0) + v
        return PartitionMultiset.from_map(counts)

    def __str__(self) -> str:
        alpha = "+".join(f"2x{a}" if v == 2 else str(a) for a, v in zip(self.alpha_set, self.x))
        return f"({'+'.join(map(str, self.lambda_set))})+({alpha})"


def decompositions_A(p: PartitionMultiset, m: int, k: int) -> list[DecompositionA]:
    """Every (λ, α, x) triple over {1..m} whose combined multiset is p.

    A value outside p's support must be unused; each value in the support
    takes one of three roles: in λ, in α with x=1, or in α with x=2.
    Assignments are kept when |λ| = k, |α| <= m - k, all parts are <= m and
    the resulting multiset equals p.
    """
    support = [part for part, _ in p.items]
    if any(part > m for part in support):
        return []
    target = p.parts
    out = []
    for roles in product((1, 2, 3), repeat=len(support)):
        lam = tuple(v for v, r in zip(support, roles) if r == 1)
        if len(lam) != k:
            continue
        picked = [(v, r - 1) for v, r in zip(support, roles) if r >= 2]
        if len(picked) > m - k:
            continue
        d = DecompositionA(lam, tuple(v for v, _ in picked), tuple(x for _, x in picked))
        if d.multiset().parts == target:
            out.append(d)
    return out


def decompositions_Q(p: PartitionMultiset, i: int, j: int) -> int:
    """Ways to split p into an i-set and a j-set of distinct parts (ordered pair)."""
    support = [part for part, _ in p.items]
    target = p.parts
    count = 0
    for lam in combinations(support, i):
        for alpha in combinations(support, j):
            merged: dict[int, int] = {}
            for v in lam + alpha:
                merged[v] = merged.get(v, 0) + 1
            if merged == target:
                count += 1
    return count


def lemma_term(k: int, a: int, j: int) -> int:
    """(-a+2j)/k * C(-a+2j+k-1, 2k-1) * C(a, j), with the 1/k checked exact."""
    d = 2 * j - a
    return exact_div(d * gbinomial(d + k - 1, 2 * k - 1), k, f"(-a+2j)/k, k={k}, a={a}, j={j}") * comb(a, j)


def lemma_lhs(k: int, a: int) -> int:
    """Half-range sum over j = floor((k+a)/2) .. a."""
    return sum(lemma_term(k, a, j) for j in range((k + a) // 2, a + 1))


def lemma_rhs(k: int, a: int) -> int:
    """2^(a-k) C(a, k)."""
    c = comb(a, k) if a >= 0 else 0
    return c << (a - k) if c else 0


def lemma_full_lhs(k: int, a: int) -> int:
    """Full-range sum over j = 0 .. a; denoted f_k(a)."""
    return sum(lemma_term(k, a, j) for j in range(0, a + 1))


def lemma_full_rhs(k: int, a: int) -> int:
    """2^(a-k+1) C(a, k)."""
    c = comb(a, k) if a >= 0 else 0
    return c << (a - k + 1) if c else 0


def recurrence_residual(k: int, a: int) -> int:
    """(a-k) f_k(a) - 2a f_k(a-1)."""
    return (a - k) * lemma_full_lhs(k, a) - 2 * a * lemma_full_lhs(k, a - 1)


def c10_sides(m: int, k: int, n: int) -> tuple[int, int]:
    """Both sides of the P/Q signed-count identity at one n."""
    lhs = 0
    for l in range(k, m + 1):
        lhs += (-2) ** (l - k) * comb(l, k) * P_count(m, l, n, limit=n)
    rhs = 0
    for i in range(0, m - k + 1):
        for j in range(i + k, m + 1):
            d = j - i
            w = exact_div(d * gbinomial(d + k - 1, 2 * k - 1), k, f"(j-i)/k, j-i={d}, k={k}")
            sgn = (-1) ** (d - k)
            for t in range(0, m + 1):
                c = comb(i + j - 2 * t, j - t) if i + j - 2 * t >= 0 and j - t >= 0 else 0
                if c:
                    rhs += sgn * w * c * Q_count(m, i + j, t, n, limit=n)
    return lhs, rhs


def c14_sides(m: int, l: int, n: int) -> tuple[int, int]:
    lhs = sum(Q_count(m, l + 2 * t, t, n, limit=n) for t in range(0, m - l + 1))
    return lhs, P_count(m, l, n, limit=n)
