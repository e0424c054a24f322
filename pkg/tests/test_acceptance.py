"""Exit criteria.  Each test prints one PASS/FAIL line; run this file
directly (``python3 tests/test_acceptance.py``) for just the summary."""

import time

import pytest

from padearith import suites
from padearith.families import FamilySpec, closed_form_disc, pade_pair, printed_sign_disc
from padearith.galois import (
    certify_galois,
    classify_diagonal,
    group_order,
    near_eisenstein_analysis,
    near_eisenstein_oracle,
    verify_prime_gap,
)
from padearith.newton import degree_exclusion_interval, possible_factor_degrees
from padearith.poly import discriminant, substitute_neg

# time limits per criterion, seconds
PADE_IDENTITY_SECONDS = 10
PRIME_GAP_SECONDS = 5

_CERTS = {}  # definite certificates from criteria 6 and 7, reused by 11


def _report(capsys, number, ok, detail):
    with capsys.disabled():
        print(f"\n[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def _emit(number, ok, detail):
    print(f"[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {detail}")
    return ok


def check_1():
    t = time.perf_counter()
    rep = suites.pade_identity(16)
    dt = time.perf_counter() - t
    return rep.ok and dt < PADE_IDENTITY_SECONDS, f"pade identity: {len(rep.checks)} cases, {len(rep.failures())} failures, {dt:.2f}s"


def check_2():
    bad = [(u, v) for u in range(31) for v in range(31)
           if u + v and pade_pair(u, v)[0] != substitute_neg(pade_pair(v, u)[1])]
    return not bad, f"P(u,v,x) = Q(v,u,-x) for u,v <= 30; mismatches {bad[:3]}"


def check_3():
    rep = suites.disc_suite(12)
    control = printed_sign_disc(2, 3) == 16 and closed_form_disc(2, 3) == -16 == discriminant(pade_pair(2, 3)[0])
    return rep.ok and control, f"closed form = resultant on 1<=n<=12, 0<=r<=12; (-1)^u control gives +16 vs -16: {control}"


def check_4():
    rep = suites.square_class_suite(40)
    return rep.ok, f"square classes 2<=m<=40: {len(rep.checks)} cases, {len(rep.failures())} failures"


def check_5():
    rep = suites.eisenstein_suite()
    return rep.ok, f"valuation lemmas, single segment, Eisenstein-Dumas: {len(rep.checks)} checks over 8 (p,n) x 2 sides, {len(rep.failures())} failures"


def check_6():
    bad, conditional = [], []
    for m in range(2, 21):
        for fam in ("P", "Q"):
            cert = certify_galois(FamilySpec(fam, u=m, v=m + 1))
            if not cert.definite or cert.conclusion != classify_diagonal(m, 1, fam):
                bad.append((fam, m, 1, cert.conclusion))
            _CERTS[(fam, m, 1)] = cert
    for m in range(2, 13):
        for fam in ("P", "Q"):
            cert = certify_galois(FamilySpec(fam, u=m, v=m))
            if cert.group != f"S_{m}":
                bad.append((fam, m, 0, cert.conclusion))
            if cert.conclusion == "CONDITIONAL":
                conditional.append(f"{fam}({m},{m})")
            _CERTS[(fam, m, 0)] = cert
    note = f"conditional delta=0 rows: {', '.join(conditional) or 'none'}"
    return not bad, f"Galois table delta=1 m<=20, delta=0 m<=12; mismatches {bad}; {note}"


def check_7():
    bad = []
    for n in range(3, 16):
        cert = certify_galois(FamilySpec.exp(n))
        want = f"{'A' if n % 4 == 0 else 'S'}_{n}"
        if cert.conclusion != want:
            bad.append((n, cert.conclusion))
        _CERTS[("e", n)] = cert
    return not bad, f"e_n, 3<=n<=15, A_n iff 4|n; mismatches {bad}"


def check_8():
    t = time.perf_counter()
    big = verify_prime_gap(21, 100000)
    small = verify_prime_gap(2, 20)
    dt = time.perf_counter() - t
    ok = big.ok and 20 in small.failures and dt < PRIME_GAP_SECONDS
    return ok, f"(21, 100000) failures {list(big.failures)}; (2, 20) failures {list(small.failures)}; {dt:.2f}s"


def check_9():
    rep = suites.schur_suite(40, (3, 5, 7))
    q34 = next(c for c in rep.checks if c.detail["family"] == "Q" and c.detail["m"] == 3
               and c.detail["p"] == 3 and c.detail["delta"] == 1)
    ok = rep.ok and q34.detail["scalar"] == -1
    return ok, f"Schur congruences: {len(rep.checks)} cases, {len(rep.failures())} failures; Q(3,4) at 3 scalar {q34.detail['scalar']}"


def check_10():
    out, ok = [], True
    for p in (3, 5, 7, 11, 13):
        f = pade_pair(p + 1, p + 2)[0]
        degs = possible_factor_degrees(f, [p])
        ex = degree_exclusion_interval(f, p)
        res = near_eisenstein_analysis(p, "P")
        oracle = near_eisenstein_oracle(p, "P")
        dichotomy = not any(1 < d < p for d in degs)
        good = degs == {0, 1, p, p + 1} and (ex.lower, ex.upper) == (1, p) and res.conclusion == oracle and dichotomy
        ok &= good
        out.append(f"p={p}:{res.conclusion}")
    return ok, "near-Eisenstein P(p+1,p+2): " + ", ".join(out)


def check_11():
    if not _CERTS:
        check_6()
        check_7()
    bad = [k for k, c in _CERTS.items() if c.definite and group_order(c.conclusion) % c.newton_index]
    n = sum(c.definite for c in _CERTS.values())
    return not bad, f"newton_index divides |G| for {n} definite certificates; violations {bad}"


CRITERIA = [check_1, check_2, check_3, check_4, check_5, check_6,
            check_7, check_8, check_9, check_10, check_11]


@pytest.mark.acceptance
@pytest.mark.parametrize("number", range(1, 12))
def test_criterion(number, capsys):
    ok, detail = CRITERIA[number - 1]()
    _report(capsys, number, ok, detail)


if __name__ == "__main__":
    import sys

    results = [_emit(i, *c()) for i, c in enumerate(CRITERIA, 1)]
    print(f"{sum(results)}/{len(results)} criteria pass")
    sys.exit(0 if all(results) else 1)
