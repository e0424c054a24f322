"""
Command-line entry point.

    padearith poly P 4 5
    padearith certify Q 8 9 --json
    padearith table --delta 1 --m 4..20
    padearith np P 3 4 --prime 3
    padearith verify eisenstein --p 3 --n 2

Exit codes: 0 success, 1 verification failure, 2 unresolved certificate,
64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, Sequence

from . import suites
from .families import Family, FamilySpec
from .galois import certify_galois
from .newton import newton_polygon
from .poly import DEFAULT_SEED, Polynomial, factor_mod, reduce_mod

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_UNRESOLVED = 2
EXIT_USAGE = 64

DEFAULT_BUDGET = 400

TABLE_HELP = (
    "Rows are indexed by m with P(m, m+delta) of degree m and Q(m, m+delta) of "
    "degree m + delta; groups are named by the degree of the polynomial."
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _common() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("tsv", "json", "pretty"), default=argparse.SUPPRESS)
    common.add_argument("--json", action="store_const", const="json", dest="format",
                        default=argparse.SUPPRESS, help="shorthand for --format json")
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS,
                        help=f"maximum polynomial degree (default {DEFAULT_BUDGET})")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS,
                        help=f"seed for equal-degree splitting (default {DEFAULT_SEED})")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="padearith", description=__doc__.split("\n\n")[0].strip(),
                     parents=[common])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("poly", parents=[common], help="print a family member's coefficients")
    p.add_argument("family", choices=("P", "Q", "e", "L"))
    p.add_argument("params", nargs="+", type=int, help="u v | n | n r")
    p.add_argument("--mod", type=int, help="also factor the polynomial modulo this prime")

    c = sub.add_parser("certify", parents=[common], help="Galois certificate for a family member")
    c.add_argument("family", choices=("P", "Q", "e", "L"))
    c.add_argument("params", nargs="+", type=int)

    t = sub.add_parser("table", parents=[common], help="Galois groups of diagonal approximants",
                       description=TABLE_HELP)
    t.add_argument("--delta", type=int, choices=(0, 1), default=1)
    t.add_argument("--m", default="2..20", help="range lo..hi (inclusive)")

    n = sub.add_parser("np", parents=[common], help="Newton polygon of a family member")
    n.add_argument("family", choices=("P", "Q", "e", "L"))
    n.add_argument("params", nargs="+", type=int)
    n.add_argument("--prime", type=int, required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=sorted(suites.SUITES))
    v.add_argument("--p", type=int)
    v.add_argument("--n", type=int)
    v.add_argument("--side", choices=("P", "Q", "both"), default=None)
    v.add_argument("--lo", type=int)
    v.add_argument("--hi", type=int)
    v.add_argument("--max", type=int)
    v.add_argument("--primes", help="comma-separated primes")
    return parser


def _spec(family: str, params: Sequence[int]) -> FamilySpec:
    need = {"P": 2, "Q": 2, "e": 1, "L": 2}[family]
    if len(params) != need:
        raise UsageError(f"family {family} takes {need} integer parameter(s)")
    try:
        if family in ("P", "Q"):
            return FamilySpec(Family(family), u=params[0], v=params[1])
        if family == "e":
            return FamilySpec.exp(params[0])
        if params[1] < 0:
            raise UsageError("L n r needs r >= 0")
        return FamilySpec.shifted(params[0], params[1])
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _check_budget(degree: int, budget: int) -> None:
    if degree > budget:
        raise UsageError(f"degree {degree} exceeds budget {budget}")


def _parse_range(text: str) -> range:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError as exc:
        raise UsageError(f"bad range {text!r}; expected lo..hi") from exc
    if lo < 1 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return range(lo, hi + 1)


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False)


def cmd_poly(args, fmt: str, out: Callable[[str], None]) -> int:
    spec = _spec(args.family, args.params)
    _check_budget(spec.degree, args.budget)
    f = spec.build()
    if fmt == "json":
        payload: dict = {"family": args.family, "params": args.params, "coefficients": f.to_json()}
        if args.mod:
            payload["mod"] = _factor_dict(f, args.mod, args.seed)
        out(_dump(payload))
        return EXIT_OK
    sep = "\t" if fmt == "tsv" else " "
    out(sep.join(str(c) for c in f.coeffs))
    if args.mod:
        d = _factor_dict(f, args.mod, args.seed)
        factors = " * ".join(f"({' '.join(g)})^{e}" for g, e in d["factors"])
        out(f"mod {args.mod}: {d['unit']} * {factors}" if factors else f"mod {args.mod}: {d['unit']}")
    return EXIT_OK


def _factor_dict(f: Polynomial, p: int, seed: int) -> dict:
    from .numeric import is_prime

    if not is_prime(p):
        raise UsageError(f"--mod {p} is not prime")
    fac = factor_mod(reduce_mod(f, p), seed=seed)
    return {
        "prime": p,
        "seed": seed,
        "unit": fac.unit,
        "factors": [[[str(c) for c in g.coeffs], e] for g, e in fac.factors],
    }


def _pretty_certificate(d: dict) -> List[str]:
    lines = []
    for key, val in d.items():
        if isinstance(val, dict):
            inner = ", ".join(f"{k}={v}" for k, v in val.items())
            lines.append(f"{key}: {inner}")
        else:
            lines.append(f"{key}: {val}")
    return lines


def cmd_certify(args, fmt, out) -> int:
    spec = _spec(args.family, args.params)
    _check_budget(spec.degree, args.budget)
    cert = certify_galois(spec)
    d = cert.to_dict()
    if fmt == "json":
        out(_dump(d))
    elif fmt == "tsv":
        out("\t".join(f"{k}={_dump(v) if isinstance(v, (dict, list)) else v}" for k, v in d.items()))
    else:
        for line in _pretty_certificate(d):
            out(line)
    return EXIT_OK if cert.definite else EXIT_UNRESOLVED


def cmd_table(args, fmt, out) -> int:
    rows = []
    unresolved = False
    for m in _parse_range(args.m):
        _check_budget(m + args.delta, args.budget)
        row: dict = {"m": m}
        for fam in ("P", "Q"):
            cert = certify_galois(FamilySpec(Family(fam), u=m, v=m + args.delta))
            unresolved |= cert.conclusion == "UNRESOLVED"
            label = cert.conclusion
            if cert.conclusion == "CONDITIONAL":
                label = f"{cert.conditional_group}?"
            row[fam] = label
            row[f"{fam}_evidence"] = (
                f"{cert.irreducibility.kind.value}/{cert.an_containment.kind.value}"
            )
        rows.append(row)
    if fmt == "json":
        out(_dump({"delta": args.delta, "rows": rows}))
    elif fmt == "tsv":
        out("m\tP\tQ\tP_evidence\tQ_evidence")
        for r in rows:
            out(f"{r['m']}\t{r['P']}\t{r['Q']}\t{r['P_evidence']}\t{r['Q_evidence']}")
    else:
        out(f"{'m':>3}  {'Gal P(m,m+' + str(args.delta) + ')':<16}{'Gal Q(m,m+' + str(args.delta) + ')':<16}evidence")
        for r in rows:
            out(f"{r['m']:>3}  {r['P']:<16}{r['Q']:<16}{r['P_evidence']}; {r['Q_evidence']}")
        if any(r["P"].endswith("?") or r["Q"].endswith("?") for r in rows):
            out("? = irreducibility taken from the literature registry (conditional)")
    return EXIT_UNRESOLVED if unresolved else EXIT_OK


def cmd_np(args, fmt, out) -> int:
    from .numeric import is_prime

    spec = _spec(args.family, args.params)
    _check_budget(spec.degree, args.budget)
    if not is_prime(args.prime):
        raise UsageError(f"--prime {args.prime} is not prime")
    poly = newton_polygon(spec.build(), args.prime)
    d = poly.to_dict()
    if fmt == "json":
        out(_dump(d))
    elif fmt == "tsv":
        out("slope\tlength")
        for s in d["segments"]:
            out(f"{s['slope']}\t{s['length']}")
    else:
        out(f"{spec.label()} at p = {args.prime}")
        out("vertices: " + " ".join(f"({j},{v})" for j, v in d["vertices"]))
        for s in d["segments"]:
            out(f"  slope {s['slope']:>8}  length {s['length']}")
        out(f"flatness {d['flatness']}, steepness {d['steepness']}")
    return EXIT_OK


def cmd_verify(args, fmt, out) -> int:
    try:
        result = suites.run(args.suite, args)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    d = result.to_dict()
    if fmt == "json":
        out(_dump({"suite": args.suite, **d}))
    elif fmt == "tsv":
        for c in d["checks"]:
            params = {k: v for k, v in c.items() if k not in ("name", "ok")}
            out(f"{c['name']}\t{'PASS' if c['ok'] else 'FAIL'}\t{_dump(params)}")
    else:
        status = "PASS" if result.ok else "FAIL"
        out(f"{status} {args.suite} ({len(result.checks)} checks)")
        for note in result.info.get("notes", []):
            out(f"  note: {note}")
        for c in result.failures():
            out(f"  FAIL {c.name} {_dump(c.detail)}")
    return EXIT_OK if result.ok else EXIT_FAIL


COMMANDS: Dict[str, Callable] = {
    "poly": cmd_poly,
    "certify": cmd_certify,
    "table": cmd_table,
    "np": cmd_np,
    "verify": cmd_verify,
}


def main(argv: Optional[Sequence[str]] = None, out: Callable[[str], None] = print) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", None) or "pretty"
    args.budget = getattr(args, "budget", DEFAULT_BUDGET)
    args.seed = getattr(args, "seed", DEFAULT_SEED)
    try:
        return COMMANDS[args.command](args, fmt, out)
    except UsageError as exc:
        print(f"padearith: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
