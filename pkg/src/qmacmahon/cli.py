"""Command-line front end: ``qmacmahon expand | stat | verify``.

Exit codes: 0 all checks pass, 1 at least one identity mismatch, 2 usage or
parameter error.  Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import identities as ident
from . import oracles
from .macmahon import SeriesSpec, macmahon
from .qfunctions import Sign

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_m(text: str) -> int | None:
    if text.lower() in ("inf", "infinity"):
        return None
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"m must be a positive integer or 'inf', got {text!r}") from None


def _parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def cmd_expand(args) -> int:
    try:
        sign = Sign.parse(args.sign)
        spec = SeriesSpec(args.family.upper(), sign, args.k, args.m, args.order)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    s = macmahon(spec)
    m_text = "inf" if spec.m is None else spec.m
    if args.format == "json":
        print(_dump({
            "family": spec.family,
            "sign": str(sign),
            "k": spec.k,
            "m": m_text,
            "order": spec.order,
            "coeffs": [str(c) for c in s.coeffs],
        }))
    else:
        print(f"{spec.family}_{{{spec.k},{m_text}}}^{sign}(q) to order {spec.order}")
        for n, c in enumerate(s.coeffs):
            print(f"{n:>5}  {c}")
    return EXIT_OK


_STATS = {
    "a+": ("k", "n"),
    "a-": ("k", "n"),
    "c+": ("k", "n"),
    "c-": ("k", "n"),
    "p3": ("n",),
    "overline-p": ("n",),
    "P": ("m", "l", "n"),
    "Q": ("m", "s", "t", "n"),
}


def _stat_value(name: str, params: dict, n: int, limit: int | None) -> int:
    if name in ("a+", "a-", "c+", "c-"):
        sign = Sign.PLUS if name[1] == "+" else Sign.MINUS
        f = oracles.a_stat if name[0] == "a" else oracles.c_stat
        return f(sign, params["k"], n, limit=limit)
    if name == "p3":
        return oracles.p3(n, limit=limit)
    if name == "overline-p":
        return oracles.overpartition_count(n, limit=limit)
    if name == "P":
        return oracles.P_count(params["m"], params["l"], n, limit=limit)
    return oracles.Q_count(params["m"], params["s"], params["t"], n, limit=limit)


def cmd_stat(args) -> int:
    needed = _STATS[args.name]
    params = {}
    for key in needed:
        if key == "n":
            continue
        value = getattr(args, key)
        if value is None:
            raise UsageError(f"stat {args.name} needs --{key}")
        params[key] = value
    if args.n is None:
        raise UsageError(f"stat {args.name} needs --n (a value or a range lo..hi)")
    ns = args.n
    if "k" in params and params["k"] < 1:
        raise UsageError("k must be positive")
    if any(n < 0 for n in ns):
        raise UsageError("n must be non-negative")
    if "k" in params and any(n < 1 for n in ns):
        raise UsageError("n must be positive for a/c statistics")
    limit = max(ns) if args.force else None
    try:
        values = [(n, _stat_value(args.name, params, n, limit)) for n in ns]
    except oracles.OracleLimitError as exc:
        raise UsageError(f"{exc} (pass --force)") from None
    if args.format == "json":
        print(_dump({
            "stat": args.name,
            "params": params,
            "values": [{"n": n, "value": str(v)} for n, v in values],
        }))
    else:
        for n, v in values:
            print(f"{args.name}({', '.join(f'{k}={v}' for k, v in params.items())}{', ' if params else ''}n={n}) = {v}")
    return EXIT_OK


def _signs(text: str) -> tuple[Sign, ...]:
    if text == "both":
        return (Sign.PLUS, Sign.MINUS)
    return (Sign.parse(text),)


def _points(args) -> list[tuple[str, dict]]:
    identity_id = args.identity_pos or args.identity
    if identity_id is None:
        raise UsageError("verify needs an identity id or 'all'")
    signs = _signs(args.sign)
    if identity_id == "all":
        return ident.suite_grid(args.order, args.max_k, args.max_m, args.n_max, args.a_max, signs)
    try:
        d = ident.descriptor(identity_id)
    except ident.UnknownIdentity:
        raise UsageError(f"unknown identity {identity_id!r}; known: {', '.join(ident.REGISTRY)}") from None
    explicit = any(v is not None for v in (args.k, args.m, args.l, args.a))
    if not explicit:
        return ident.suite_grid(args.order, args.max_k, args.max_m, args.n_max, args.a_max, signs, [identity_id])
    base = {"k": args.k, "m": args.m, "l": args.l, "a": args.a, "order": args.order,
            "n_max": args.n_max, "a_max": args.a_max}
    base = {key: v for key, v in base.items() if v is not None}
    if d.kind == ident.SERIES:
        use = [s for s in signs if s in d.signs] if args.sign == "both" else list(signs)
        return [(identity_id, {**base, "sign": s}) for s in use]
    return [(identity_id, base)]


def cmd_verify(args) -> int:
    points = _points(args)
    reports = []
    for identity_id, params in points:
        try:
            reports.append(ident.verify(identity_id, params))
        except ident.ParameterError as exc:
            raise UsageError(f"{identity_id}: {exc}") from None
    if args.format == "json":
        print(_dump([r.to_dict(timings=args.timings) for r in reports]))
    else:
        for r in reports:
            line = r.summary()
            if args.timings:
                line += f" {r.elapsed:.3f}s"
            print(line)
        failed = sum(not r.passed for r in reports)
        print(f"{len(reports) - failed}/{len(reports)} passed", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qmacmahon", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--format", choices=("text", "json"), default="text")
    shared.add_argument("--force", action="store_true", help="lift the n <= 40 enumeration guard")

    p = sub.add_parser("expand", parents=[shared], help="coefficients of A or C series")
    p.add_argument("--family", choices=("A", "C", "a", "c"), required=True)
    p.add_argument("--sign", default="plus", help="plus or minus")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=_parse_m, default=None, help="positive integer or 'inf' (default)")
    p.add_argument("--order", type=int, default=20)
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("stat", parents=[shared], help="brute-force partition statistics")
    p.add_argument("name", choices=sorted(_STATS))
    p.add_argument("--n", type=_parse_range, help="n or lo..hi")
    for key in ("k", "m", "l", "s", "t"):
        p.add_argument(f"--{key}", type=int)
    p.set_defaults(func=cmd_stat)

    p = sub.add_parser("verify", parents=[shared], help="check identities")
    p.add_argument("identity_pos", nargs="?", metavar="ID", help="identity id or 'all'")
    p.add_argument("--identity")
    p.add_argument("--order", type=int, default=50)
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--max-k", type=int, default=4)
    p.add_argument("--max-m", type=int, default=8)
    p.add_argument("--sign", choices=("plus", "minus", "both"), default="both")
    p.add_argument("--n-max", type=int, default=ident.DEFAULT_N_MAX)
    p.add_argument("--a-max", type=int, default=ident.DEFAULT_A_MAX)
    p.add_argument("--timings", action="store_true", help="include wall times (breaks byte-stable output)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qmacmahon: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
