"""Registry of identities and the verification runner.

Series identities are compared coefficient by coefficient up to the
truncation order, by default in cleared-denominator form.  Combinatorial
identities compare two integers for every n in a range; the lemma and its
recurrence compare over a range of ``a``.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import macmahon, oracles
from .integers import IntegralityError
from .qfunctions import Sign
from .series import first_difference

SERIES = "series-identity"
COMBINATORIAL = "combinatorial-identity"
RECURRENCE = "recurrence"

DEFAULT_N_MAX = 25
DEFAULT_A_MAX = 40


class UnknownIdentity(KeyError):
    pass


class ParameterError(ValueError):
    pass


@dataclass(frozen=True)
class Mismatch:
    index: int
    lhs: int
    rhs: int


@dataclass
class IdentityReport:
    id: str
    params: dict
    index: str  # what the checked range runs over: "q", "n" or "a"
    checked: tuple[int, int]
    status: str
    first_mismatch: Mismatch | None = None
    detail: str | None = None
    elapsed: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = False) -> dict:
        params = {k: (str(v) if isinstance(v, Sign) else v) for k, v in sorted(self.params.items())}
        d = {
            "id": self.id,
            "params": params,
            "index": self.index,
            "checked": list(self.checked),
            "status": self.status,
            "first_mismatch": None,
            "detail": self.detail,
        }
        if self.first_mismatch is not None:
            mm = self.first_mismatch
            d["first_mismatch"] = {"index": mm.index, "lhs": str(mm.lhs), "rhs": str(mm.rhs)}
        if timings:
            d["elapsed"] = round(self.elapsed, 6)
        return d

    def summary(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        line = f"{self.status.upper():4s} {self.id:9s} {ps} [{self.index} {self.checked[0]}..{self.checked[1]}]"
        if self.first_mismatch is not None:
            mm = self.first_mismatch
            line += f" first mismatch at {self.index}={mm.index}: {mm.lhs} != {mm.rhs}"
        if self.detail:
            line += f" ({self.detail})"
        return line


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    kind: str
    summary: str
    signs: tuple[Sign, ...] = (Sign.PLUS,)
    k_min: int = 1
    finite_m: bool = False

    @property
    def both_signs(self) -> bool:
        return len(self.signs) == 2


_BOTH = (Sign.PLUS, Sign.MINUS)

REGISTRY: dict[str, IdentityDescriptor] = {
    d.id: d
    for d in [
        IdentityDescriptor("ar-1", SERIES, "A_k^+ = (q;q)_inf^-3 sum (-1)^(n-k) (2n+1)/(2k+1) C(n+k,2k) q^(n(n+1)/2)", k_min=0),
        IdentityDescriptor("ar-2", SERIES, "C_k^+ = (-q;q)_inf/(q;q)_inf sum (-1)^(n-k) 2n/(n+k) C(n+k,2k) q^(n^2)"),
        IdentityDescriptor("os-1", SERIES, "q^(k(k+1)/2)/(q;q)_inf^3 = sum_m C(2m+1,m+k+1) A_m^+", k_min=0),
        IdentityDescriptor("os-2", SERIES, "q^(k^2)(-q;q)_inf/(q;q)_inf = sum_m C(2m,m+k) C_m^+", k_min=0),
        IdentityDescriptor("a-1", SERIES, "sum_j C(2j+1,j+k+1) A_{j,m}^+ = q^(k(k+1)/2)/(q;q)_m^2 [2m+1,m+k+1]", k_min=0, finite_m=True),
        IdentityDescriptor("a-2", SERIES, "sum_j (±1)^(j-k) C(2j,j+k) C_{j,m}^± = q^(k^2)/(±q;q^2)_m^2 [2m,m+k]_{q^2}", _BOTH, k_min=0, finite_m=True),
        IdentityDescriptor("a-3", SERIES, "A_{k,m}^+ = (q;q)_m^-2 sum_j (-1)^(j-k) (2j+1)/(2k+1) C(j+k,2k) [2m+1,m+j+1] q^(j(j+1)/2)", finite_m=True),
        IdentityDescriptor("a-4", SERIES, "C_{k,m}^± = (±q;q^2)_m^-2 sum_j (∓1)^(j-k) 2j/(j+k) C(j+k,2k) [2m,m+j]_{q^2} q^(j^2)", _BOTH, finite_m=True),
        IdentityDescriptor("m-1", SERIES, "A_{k,m}^± as a double q-binomial sum over (±q;q)_m^2", _BOTH, finite_m=True),
        IdentityDescriptor("m-2", SERIES, "C_{k,m}^± as a double q^2-binomial sum over (±q;q^2)_m^2", _BOTH, finite_m=True),
        IdentityDescriptor("m-3", SERIES, "A_k^± as a double sum over (q;q)_i (q;q)_j, divided by (±q;q)_inf^2", _BOTH),
        IdentityDescriptor("m-4", SERIES, "C_k^± as a double sum over (q^2;q^2)_i (q^2;q^2)_j, divided by (±q;q^2)_inf^2", _BOTH),
        IdentityDescriptor("t3-a", SERIES, "single theta-type sum over (q;q)_inf equals the A-type double sum"),
        IdentityDescriptor("t3-c", SERIES, "single theta-type sum over (q^2;q^2)_inf equals the C-type double sum"),
        IdentityDescriptor("c-1", RECURRENCE, "half-range lemma sum equals 2^(a-k) C(a,k)"),
        IdentityDescriptor("c-2", RECURRENCE, "full-range lemma sum equals 2^(a-k+1) C(a,k)"),
        IdentityDescriptor("zeil-rec", RECURRENCE, "(a-k) f_k(a) - 2a f_k(a-1) = 0"),
        IdentityDescriptor("c-10", COMBINATORIAL, "signed P-count sum equals the weighted Q-count sum"),
        IdentityDescriptor("c-14", COMBINATORIAL, "sum_t Q(m, l+2t, t, n) = P(m, l, n)", k_min=0),
    ]
}


def descriptor(identity_id: str) -> IdentityDescriptor:
    try:
        return REGISTRY[identity_id]
    except KeyError:
        raise UnknownIdentity(f"unknown identity {identity_id!r}") from None


def _need(params: dict, name: str, lo: int | None = None) -> int:
    if params.get(name) is None:
        raise ParameterError(f"missing parameter {name!r}")
    v = params[name]
    if not isinstance(v, int):
        raise ParameterError(f"{name} must be an integer")
    if lo is not None and v < lo:
        raise ParameterError(f"{name}={v} is below the minimum {lo}")
    return v


def normalize_params(identity_id: str, params: dict) -> dict:
    """Validate params against the identity's domain and fill defaults."""
    d = descriptor(identity_id)
    p = dict(params)
    if d.kind == SERIES:
        k = _need(p, "k", d.k_min)
        _need(p, "order", 0)
        sign = p.get("sign", Sign.PLUS)
        if isinstance(sign, str):
            sign = Sign.parse(sign)
        if sign not in d.signs:
            raise ParameterError(f"{identity_id} is stated only for sign +")
        p["sign"] = sign
        if d.finite_m:
            m = _need(p, "m", max(k, 1))
            if m < k:
                raise ParameterError(f"need m >= k, got m={m}, k={k}")
        else:
            p.pop("m", None)
        return {key: p[key] for key in ("k", "m", "sign", "order") if key in p}
    if d.kind == RECURRENCE:
        _need(p, "k", 1)
        if p.get("a") is not None:
            _need(p, "a", 1 if identity_id == "zeil-rec" else 0)
            return {"k": p["k"], "a": p["a"]}
        p.setdefault("a_max", DEFAULT_A_MAX)
        _need(p, "a_max", 0)
        return {"k": p["k"], "a_max": p["a_max"]}
    # combinatorial
    m = _need(p, "m", 1)
    p.setdefault("n_max", DEFAULT_N_MAX)
    _need(p, "n_max", 0)
    if identity_id == "c-10":
        k = _need(p, "k", 1)
        if k > m:
            raise ParameterError(f"need k <= m, got k={k}, m={m}")
        return {"k": k, "m": m, "n_max": p["n_max"]}
    l = _need(p, "l", 0)
    if l > m:
        raise ParameterError(f"need l <= m, got l={l}, m={m}")
    return {"l": l, "m": m, "n_max": p["n_max"]}


def _compare_values(pairs: Iterable[tuple[int, int, int]]) -> Mismatch | None:
    for idx, lhs, rhs in pairs:
        if lhs != rhs:
            return Mismatch(idx, lhs, rhs)
    return None


def _check_series(identity_id: str, p: dict, form: str):
    sides = macmahon.build_sides(identity_id, p)
    if form == "cleared":
        lhs, rhs = sides.cleared()
    elif form == "quotient":
        lhs, rhs = sides.lhs(), sides.rhs()
    else:
        raise ParameterError(f"form must be 'cleared' or 'quotient', got {form!r}")
    i = first_difference(lhs.coeffs, rhs.coeffs)
    mm = None if i is None else Mismatch(i, lhs[i], rhs[i])
    return "q", (0, p["order"]), mm


def _check_recurrence(identity_id: str, p: dict):
    k = p["k"]
    if "a" in p:
        lo = hi = p["a"]
    else:
        lo, hi = (1 if identity_id == "zeil-rec" else 0), p["a_max"]
    if identity_id == "c-1":
        f: Callable[[int], tuple[int, int]] = lambda a: (oracles.lemma_lhs(k, a), oracles.lemma_rhs(k, a))
    elif identity_id == "c-2":
        f = lambda a: (oracles.lemma_full_lhs(k, a), oracles.lemma_full_rhs(k, a))
    else:
        f = lambda a: (oracles.recurrence_residual(k, a), 0)
    return "a", (lo, hi), _compare_values((a, *f(a)) for a in range(lo, hi + 1))


def _check_combinatorial(identity_id: str, p: dict):
    n_max = p["n_max"]
    if identity_id == "c-10":
        f = lambda n: oracles.c10_sides(p["m"], p["k"], n)
    else:
        f = lambda n: oracles.c14_sides(p["m"], p["l"], n)
    return "n", (0, n_max), _compare_values((n, *f(n)) for n in range(n_max + 1))


def verify(identity_id: str, params: dict, form: str = "cleared") -> IdentityReport:
    """Check one identity at one parameter point; never raises on mismatch."""
    d = descriptor(identity_id)
    p = normalize_params(identity_id, params)
    start = time.perf_counter()
    detail = None
    try:
        if d.kind == SERIES:
            index, rng, mm = _check_series(identity_id, p, form)
        elif d.kind == RECURRENCE:
            index, rng, mm = _check_recurrence(identity_id, p)
        else:
            index, rng, mm = _check_combinatorial(identity_id, p)
        status = "pass" if mm is None else "fail"
    except IntegralityError as exc:
        index, rng, mm = ("q" if d.kind == SERIES else "n"), (0, 0), None
        status, detail = "fail", f"integrality violated: {exc}"
    return IdentityReport(identity_id, p, index, rng, status, mm, detail, time.perf_counter() - start)


def suite_grid(
    order: int,
    max_k: int,
    max_m: int,
    n_max: int = DEFAULT_N_MAX,
    a_max: int = DEFAULT_A_MAX,
    signs: tuple[Sign, ...] = _BOTH,
    ids: Iterable[str] | None = None,
) -> list[tuple[str, dict]]:
    """Every (identity, params) point the suite runs, in deterministic order."""
    grid = []
    for identity_id in ids or REGISTRY:
        d = descriptor(identity_id)
        if d.kind == SERIES:
            for sign in (s for s in d.signs if s in signs):
                for k in range(d.k_min, max_k + 1):
                    if d.finite_m:
                        for m in range(max(k, 1), max_m + 1):
                            grid.append((identity_id, {"k": k, "m": m, "sign": sign, "order": order}))
                    else:
                        grid.append((identity_id, {"k": k, "sign": sign, "order": order}))
        elif d.kind == RECURRENCE:
            for k in range(1, max_k + 1):
                grid.append((identity_id, {"k": k, "a_max": a_max}))
        elif identity_id == "c-10":
            for m in range(1, max_m + 1):
                for k in range(1, min(max_k, m) + 1):
                    grid.append((identity_id, {"m": m, "k": k, "n_max": n_max}))
        else:
            for m in range(1, max_m + 1):
                for l in range(0, m + 1):
                    grid.append((identity_id, {"m": m, "l": l, "n_max": n_max}))
    return grid


def verify_suite(
    order: int,
    max_k: int,
    max_m: int,
    n_max: int = DEFAULT_N_MAX,
    a_max: int = DEFAULT_A_MAX,
    signs: tuple[Sign, ...] = _BOTH,
    ids: Iterable[str] | None = None,
    form: str = "cleared",
) -> list[IdentityReport]:
    """Run every registered identity over its grid; failures are collected, not raised."""
    if order < 1:
        raise ParameterError("order must be at least 1")
    return [verify(i, p, form) for i, p in suite_grid(order, max_k, max_m, n_max, a_max, signs, ids)]


def limit_consistency(
    k: int,
    sign: Sign,
    order: int,
    ms: Iterable[int] = (2, 4, 8),
    families: Iterable[str] = ("A", "C"),
) -> IdentityReport:
    """A_{k,m} agrees with A_k up to q^m (C-family: up to q^(2m-1))."""
    if k < 1:
        raise ParameterError("k must be positive")
    start = time.perf_counter()
    ms = tuple(ms)
    families = tuple(families)
    mm = None
    detail = None
    for family in families:
        full = macmahon.macmahon(macmahon.SeriesSpec(family, sign, k, None, order))
        for m in ms:
            part = macmahon.macmahon(macmahon.SeriesSpec(family, sign, k, m, order))
            upto = min(m if family == "A" else 2 * m - 1, order)
            i = first_difference(part.coeffs[: upto + 1], full.coeffs[: upto + 1])
            if i is not None:
                mm = Mismatch(i, part[i], full[i])
                detail = f"family {family}, m={m}"
                break
        if mm is not None:
            break
    params = {"k": k, "sign": sign, "order": order, "ms": list(ms), "families": "".join(families)}
    return IdentityReport(
        "limit", params, "q", (0, order), "pass" if mm is None else "fail", mm, detail, time.perf_counter() - start
    )


def pairing_check(identity_id: str, k: int, m: int | None, sign: Sign, order: int = 10) -> dict[tuple[Sign, Sign], bool]:
    """Which (denominator sign, scalar-factor sign) pairings make the identity hold.

    The left side is built with the given ``sign``; the right side's
    Pochhammer denominator and the printed (±1)/(∓1) factor are each tried
    with both signs.  The literal reading is (sign, sign).
    """
    d = descriptor(identity_id)
    if d.kind != SERIES or not d.both_signs:
        raise ParameterError(f"{identity_id} has no sign pairing to check")
    out = {}
    for den in _BOTH:
        for fac in _BOTH:
            base = {"k": k, "m": m, "order": order, "factor_sign": fac}
            lhs = macmahon.build_sides(identity_id, {**base, "sign": sign}).lhs()
            rhs = macmahon.build_sides(identity_id, {**base, "sign": den}).rhs()
            out[(den, fac)] = lhs == rhs
    return out
