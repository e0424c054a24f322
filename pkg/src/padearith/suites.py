"""
Named verification suites.  Each returns a :class:`~padearith.galois.Report`
with one check per case, so the CLI and the test-suite share one code path.
"""

from __future__ import annotations

from typing import Callable, Dict, Iterable, Optional

from .families import (
    FamilySpec,
    closed_form_disc,
    diagonal,
    printed_sign_disc,
    schur_congruence_check,
    shifted_glp,
    verify_pade_identity,
)
from .galois import (
    Report,
    certify_galois,
    disc_square_class,
    group_order,
    near_eisenstein_analysis,
    near_eisenstein_oracle,
    verify_eisenstein_theorem,
    verify_prime_gap,
)
from .numeric import squarefree_part
from .poly import discriminant

EISENSTEIN_CASES = ((3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1), (7, 2), (11, 1))
NEAR_EISENSTEIN_PRIMES = (3, 5, 7, 11, 13)


def pade_identity(max_n: int = 16) -> Report:
    rep = Report()
    for u in range(max_n + 1):
        for v in range(max_n + 1 - u):
            if u + v < 1:
                continue
            for n in range(u + v, max_n + 1):
                r = verify_pade_identity(u, v, n)
                rep.add("pade-identity", r.ok, u=u, v=v, n=n, scalar=str(r.scalar))
    return rep


def disc_suite(max_n: int = 12) -> Report:
    rep = Report()
    for n in range(1, max_n + 1):
        for r in range(max_n + 1):
            closed = closed_form_disc(n, r)
            true = discriminant(shifted_glp(n, r))
            rep.add("closed-form=resultant", closed == true, n=n, r=r)
    # the printed sign (-1)^u must disagree somewhere; (2, 3) is the witness
    printed, true = printed_sign_disc(2, 3), discriminant(diagonal("P", 2, 1))
    rep.add("negative-control", printed != true, u=2, v=3, printed=printed, true=true)
    rep.info["notes"] = [f"sign (-1)^u gives {printed} at (2,3); true discriminant {true}"]
    return rep


def expected_square_class(family: str, m: int) -> Optional[int]:
    """Square class of disc F(m, m+1) where the case analysis pins it down;
    None means only "negative" is known."""
    if family == "P":
        if m % 4 == 0:
            return 1
        if m % 4 == 1:
            return squarefree_part(2 * ((m - 1) // 4) + 1).representative
        return None
    if m % 4 == 3:
        return 2
    if m % 4 == 0:
        return squarefree_part(m + 1).representative
    return None


def square_class_suite(max_m: int = 40, min_m: int = 2) -> Report:
    rep = Report()
    for m in range(min_m, max_m + 1):
        for fam in ("P", "Q"):
            got = disc_square_class(diagonal(fam, m, 1)).representative
            want = expected_square_class(fam, m)
            ok = got < 0 if want is None else got == want
            rep.add("square-class", ok, family=fam, m=m, got=got,
                    expected="negative" if want is None else want)
    return rep


def eisenstein_suite(cases: Iterable = EISENSTEIN_CASES, sides=("P", "Q"), budget: int = 400) -> Report:
    rep = Report()
    for p, n in cases:
        for side in sides:
            sub = verify_eisenstein_theorem(p, n, side, budget)
            for c in sub.checks:
                rep.add(c.name, c.ok, p=p, n=n, side=side, **c.detail)
    return rep


def schur_suite(max_m: int = 40, primes=(3, 5, 7)) -> Report:
    rep = Report()
    for p in primes:
        for fam in ("P", "Q"):
            for delta in (0, 1):
                for m in range(1, max_m + 1):
                    r = schur_congruence_check(fam, m, p, delta)
                    rep.add("schur-mod-p", r.ok, family=fam, delta=delta, m=m, p=p,
                            k=r.k, u=r.u, scalar=r.scalar)
    return rep


def prime_gap_suite(lo: int = 21, hi: int = 100000) -> Report:
    r = verify_prime_gap(lo, hi)
    rep = Report(info={"failures": list(r.failures)})
    rep.add("prime-gap", r.ok, lo=lo, hi=hi, failures=list(r.failures))
    return rep


def near_eisenstein_suite(primes=NEAR_EISENSTEIN_PRIMES) -> Report:
    rep = Report()
    for p in primes:
        for fam in ("P", "Q"):
            res = near_eisenstein_analysis(p, fam)
            lo, hi = res.exclusion
            rep.add("factor-degrees", set(res.constraints) == {0, 1, p, p + 1},
                    p=p, family=fam, constraints=list(res.constraints))
            rep.add("exclusion-interval", (lo, hi) == (1, p), p=p, family=fam,
                    interval=[lo, None if hi is None else str(hi)])
            rep.add("dichotomy", not any(1 < d < p for d in res.constraints), p=p, family=fam)
            oracle = near_eisenstein_oracle(p, fam)
            rep.add("oracle-agrees", oracle == res.conclusion, p=p, family=fam,
                    conclusion=res.conclusion, oracle=oracle,
                    simple_root_residues=list(res.simple_root_residues))
    return rep


def coleman_suite(lo: int = 3, hi: int = 15) -> Report:
    rep = Report()
    for n in range(lo, hi + 1):
        cert = certify_galois(FamilySpec.exp(n))
        want = f"{'A' if n % 4 == 0 else 'S'}_{n}"
        rep.add("coleman", cert.conclusion == want, n=n, got=cert.conclusion, expected=want)
        if cert.definite:
            rep.add("newton-index-divides", group_order(cert.conclusion) % cert.newton_index == 0,
                    n=n, newton_index=cert.newton_index)
    return rep


def _primes_arg(text: Optional[str], default) -> tuple:
    if not text:
        return tuple(default)
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise ValueError(f"bad prime list {text!r}") from exc


def run(name: str, args) -> Report:
    """Dispatch a suite by CLI name with options from an argparse namespace."""

    def get(key, default=None):
        val = getattr(args, key, None)
        return default if val is None else val

    if name == "pade-identity":
        return pade_identity(get("max", 16))
    if name == "discriminant":
        return disc_suite(get("max", 12))
    if name == "square-class":
        return square_class_suite(get("max", 40))
    if name == "eisenstein":
        budget = get("budget", 400)
        if get("p") is not None or get("n") is not None:
            if get("p") is None or get("n") is None:
                raise ValueError("eisenstein needs both --p and --n")
            side = get("side", "P")
            sides = ("P", "Q") if side == "both" else (side,)
            return eisenstein_suite([(get("p"), get("n"))], sides, budget)
        side = get("side", "both")
        sides = ("P", "Q") if side == "both" else (side,)
        return eisenstein_suite(EISENSTEIN_CASES, sides, budget)
    if name == "schur-mod-p":
        return schur_suite(get("max", 40), _primes_arg(get("primes"), (3, 5, 7)))
    if name == "prime-gap":
        return prime_gap_suite(get("lo", 21), get("hi", 100000))
    if name == "near-eisenstein":
        return near_eisenstein_suite(_primes_arg(get("primes"), NEAR_EISENSTEIN_PRIMES))
    if name == "coleman":
        return coleman_suite(get("lo", 3), get("max", 15))
    raise ValueError(f"unknown suite {name!r}")


SUITES: Dict[str, Callable] = {
    "pade-identity": pade_identity,
    "discriminant": disc_suite,
    "square-class": square_class_suite,
    "eisenstein": eisenstein_suite,
    "schur-mod-p": schur_suite,
    "prime-gap": prime_gap_suite,
    "near-eisenstein": near_eisenstein_suite,
    "coleman": coleman_suite,
}
