"""
Certificates for irreducibility and for Galois groups of A_n / S_n type, and
checkers for the arithmetic statements about the diagonal Padé approximants.

A certificate is built in three independent pieces:

1. irreducibility, from Eisenstein-Dumas at one prime or from a degree sieve
   (Newton segments at ramified primes, factorization patterns at unramified
   ones), with a literature registry as the last resort;
2. containment of A_n, from a Newton-index prime q with n/2 < q < n-2
   (Jordan), a Dedekind q-cycle, or for 3 <= n <= 7 an exhaustive
   cycle-type exclusion against the transitive groups of degree n;
3. the square class of the discriminant, deciding A_n versus S_n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

from .families import Family, FamilySpec, pade_pair, spec_discriminant
from .newton import (
    degree_exclusion_interval,
    eisenstein_dumas,
    local_degree_set,
    newton_index,
    newton_polygon,
    possible_factor_degrees,
    relevant_primes,
)
from .numeric import (
    SquareClass,
    factor_integer,
    factorial_valuation,
    is_prime,
    primes_in_interval,
    primes_up_to,
    squarefree_part,
    valuation,
)
from .poly import (
    Polynomial,
    degree_pattern_mod,
    discriminant,
    evaluate,
    reduce_mod,
    roots_mod,
)
from .transitive import surviving_groups, transitive_groups

#: how many unramified primes the irreducibility sieve looks at
SIEVE_UNRAMIFIED_PRIMES = 25
#: sampling bound for Dedekind cycle types
DEDEKIND_PRIME_BOUND = 10**4


class IrreducibilityKind(str, Enum):
    EISENSTEIN_DUMAS = "EISENSTEIN_DUMAS"
    DEGREE_SIEVE = "DEGREE_SIEVE"
    LITERATURE = "LITERATURE"
    NONE = "NONE"


class AnKind(str, Enum):
    NEWTON_INDEX_PRIME = "NEWTON_INDEX_PRIME"
    DEDEKIND_CYCLE = "DEDEKIND_CYCLE"
    SMALL_DEGREE_EXCLUSION = "SMALL_DEGREE_EXCLUSION"
    NONE = "NONE"


@dataclass(frozen=True)
class IrreducibilityEvidence:
    kind: IrreducibilityKind
    prime: Optional[int] = None
    primes: Tuple[int, ...] = ()
    survivors: Tuple[int, ...] = ()
    citation: Optional[str] = None

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind.value}
        if self.kind is IrreducibilityKind.EISENSTEIN_DUMAS:
            d["prime"] = self.prime
        elif self.kind is IrreducibilityKind.DEGREE_SIEVE:
            d["primes"] = list(self.primes)
            d["survivors"] = list(self.survivors)
        elif self.kind is IrreducibilityKind.LITERATURE:
            d["citation"] = self.citation
        elif self.survivors:
            d["survivors"] = list(self.survivors)
        return d


@dataclass(frozen=True)
class AnEvidence:
    kind: AnKind
    q: Optional[int] = None
    prime: Optional[int] = None
    degrees: Tuple[int, ...] = ()
    sampled_primes: Tuple[int, ...] = ()
    cycle_types: Tuple[Tuple[int, ...], ...] = ()
    eliminated: Tuple[str, ...] = ()

    def to_dict(self) -> dict:
        d: dict = {"kind": self.kind.value}
        if self.kind is AnKind.NEWTON_INDEX_PRIME:
            d["q"] = self.q
        elif self.kind is AnKind.DEDEKIND_CYCLE:
            d.update(prime=self.prime, q=self.q, degrees=list(self.degrees))
        elif self.kind is AnKind.SMALL_DEGREE_EXCLUSION:
            d.update(
                primes=list(self.sampled_primes),
                cycle_types=[list(c) for c in self.cycle_types],
                eliminated=list(self.eliminated),
            )
        return d


NONE_IRR = IrreducibilityEvidence(IrreducibilityKind.NONE)
NONE_AN = AnEvidence(AnKind.NONE)


def _disc_of(f: Polynomial, disc) -> Fraction:
    d = discriminant(f) if disc is None else disc
    if d == 0:
        raise ValueError("not squarefree: discriminant is zero")
    return Fraction(d)


def _unramified(p: int, f: Polynomial, disc: Fraction) -> bool:
    return disc.numerator % p != 0 and disc.denominator % p != 0 and f.lc % p != 0


def literature_citation(spec: Optional[FamilySpec]) -> Optional[str]:
    """Published irreducibility results covering ``spec``, if any."""
    if spec is None:
        return None
    fam = spec.family
    if fam in (Family.P, Family.Q) and spec.u == spec.v:
        return "Filaseta-Trifonov (Bessel polynomials)"
    form = spec.as_shifted()
    if form is not None and 0 <= form[1] <= 8:
        return "Hajir, Theorem 1.3 (0 <= r <= 8)"
    return None


def certify_irreducible(
    f: Polynomial,
    spec: Optional[FamilySpec] = None,
    disc=None,
    unramified_count: int = SIEVE_UNRAMIFIED_PRIMES,
) -> IrreducibilityEvidence:
    """Find a proof that f is irreducible over Q, or report NONE.

    Order: Eisenstein-Dumas at primes dividing a_0, then the degree sieve over
    the ramified primes and the first ``unramified_count`` unramified primes,
    then the literature registry.  A reducible input never gets a certificate.
    """
    if f[0] == 0:
        raise ValueError("f(0) = 0")
    d = _disc_of(f, disc)
    n = f.degree
    for p in relevant_primes(f):
        if eisenstein_dumas(f, p):
            return IrreducibilityEvidence(IrreducibilityKind.EISENSTEIN_DUMAS, prime=p)

    ramified = sorted(set(factor_integer(d.numerator)) | set(factor_integer(d.denominator)))
    used: List[int] = []
    survivors = set(range(n + 1))

    def feed(p):
        nonlocal survivors
        used.append(p)
        survivors &= local_degree_set(f, p, d)
        return survivors <= {0, n}

    done = n <= 1
    for p in ramified:
        if done:
            break
        done = feed(p)
    q, count = 2, 0
    while not done and count < unramified_count:
        if is_prime(q) and _unramified(q, f, d):
            count += 1
            done = feed(q)
        q += 1
    if done:
        return IrreducibilityEvidence(
            IrreducibilityKind.DEGREE_SIEVE, primes=tuple(used), survivors=tuple(sorted(survivors))
        )
    cite = literature_citation(spec)
    if cite:
        return IrreducibilityEvidence(
            IrreducibilityKind.LITERATURE, citation=cite, survivors=tuple(sorted(survivors))
        )
    return IrreducibilityEvidence(IrreducibilityKind.NONE, survivors=tuple(sorted(survivors)))


def jordan_primes(n: int) -> List[int]:
    """Primes q with n/2 < q < n - 2."""
    if n - 2 <= Fraction(n, 2):
        return []
    return primes_in_interval(Fraction(n, 2), n - 2)


def _sample_patterns(f: Polynomial, disc: Fraction, bound: int):
    for p in primes_up_to(bound):
        if _unramified(p, f, disc):
            yield p, tuple(degree_pattern_mod(f, p))


def an_containment(
    f: Polynomial,
    irr: IrreducibilityEvidence,
    disc=None,
    prime_bound: int = DEDEKIND_PRIME_BOUND,
) -> AnEvidence:
    """Evidence that the Galois group of the irreducible f contains A_n."""
    if irr.kind is IrreducibilityKind.NONE:
        raise ValueError("A_n containment needs irreducibility evidence")
    n = f.degree
    if n < 3:
        return NONE_AN
    d = _disc_of(f, disc)
    window = jordan_primes(n)
    if window:
        N = newton_index(f)
        for q in window:
            if N % q == 0:
                return AnEvidence(AnKind.NEWTON_INDEX_PRIME, q=q)
        for p, pattern in _sample_patterns(f, d, prime_bound):
            hits = [k for k in pattern if k in window]
            if len(hits) == 1:
                return AnEvidence(AnKind.DEDEKIND_CYCLE, q=hits[0], prime=p, degrees=pattern)
        return NONE_AN
    if n > 7:
        return NONE_AN
    targets = [G for G in transitive_groups(n) if not G.contains_alternating]
    observed: set = set()
    primes: List[int] = []
    if not targets:
        return AnEvidence(AnKind.SMALL_DEGREE_EXCLUSION)
    for p, pattern in _sample_patterns(f, d, prime_bound):
        primes.append(p)
        if pattern in observed:
            continue
        observed.add(pattern)
        alive = [G for G in surviving_groups(n, frozenset(observed)) if not G.contains_alternating]
        if not alive:
            return AnEvidence(
                AnKind.SMALL_DEGREE_EXCLUSION,
                sampled_primes=tuple(primes),
                cycle_types=tuple(sorted(observed)),
                eliminated=tuple(G.name for G in targets),
            )
    return NONE_AN


def disc_square_class(f: Polynomial) -> SquareClass:
    return squarefree_part(_disc_of(f, None))


@dataclass(frozen=True)
class GaloisCertificate:
    spec: Optional[FamilySpec]
    degree: int
    irreducibility: IrreducibilityEvidence
    an_containment: AnEvidence
    square_class: SquareClass
    newton_index: int
    conclusion: str
    conditional_group: Optional[str] = None

    @property
    def definite(self) -> bool:
        return self.conclusion not in ("CONDITIONAL", "UNRESOLVED")

    @property
    def group(self) -> Optional[str]:
        """The concluded group tag, also for conditional certificates."""
        return self.conditional_group if self.conclusion == "CONDITIONAL" else (
            self.conclusion if self.definite else None
        )

    def group_order(self) -> Optional[int]:
        return group_order(self.group) if self.group else None

    def to_dict(self) -> dict:
        d: dict = {}
        if self.spec is not None:
            d["family"] = self.spec.family.value
            form = self.spec
            if form.family in (Family.P, Family.Q):
                d.update(u=form.u, v=form.v)
            else:
                d["n"] = form.n
                if form.family is Family.SHIFTED_GLP:
                    d["r"] = form.r
        d.update(
            degree=self.degree,
            irreducibility=self.irreducibility.to_dict(),
            an_containment=self.an_containment.to_dict(),
            square_class=self.square_class.representative,
            newton_index=self.newton_index,
            conclusion=self.conclusion,
        )
        if self.conditional_group:
            d["conditional_group"] = self.conditional_group
        return d


def group_order(tag: str) -> int:
    kind, n = tag.split("_")
    n = int(n)
    full = math.factorial(n)
    if kind == "S" or n < 2:
        return full
    return full // 2


def certify_polynomial(f: Polynomial, spec: Optional[FamilySpec] = None) -> GaloisCertificate:
    n = f.degree
    if n < 1:
        raise ValueError("need a nonconstant polynomial")
    disc = discriminant(f)
    closed = spec_discriminant(spec) if spec is not None else None
    # resultant and closed form are independent routes; refuse to certify on a mismatch
    if closed is not None and closed != disc:
        raise AssertionError(f"closed-form discriminant disagrees for {spec.label()}")
    irr = certify_irreducible(f, spec, disc)
    sq = squarefree_part(disc)
    N = newton_index(f.strip_x())
    tag = f"{'A' if sq.is_square else 'S'}_{n}"
    if irr.kind is IrreducibilityKind.NONE:
        return GaloisCertificate(spec, n, irr, NONE_AN, sq, N, "UNRESOLVED")
    an = an_containment(f, irr, disc)
    if an.kind is AnKind.NONE and n >= 3:
        return GaloisCertificate(spec, n, irr, an, sq, N, "UNRESOLVED")
    if irr.kind is IrreducibilityKind.LITERATURE:
        return GaloisCertificate(spec, n, irr, an, sq, N, "CONDITIONAL", tag)
    return GaloisCertificate(spec, n, irr, an, sq, N, tag)


def certify_galois(spec: FamilySpec) -> GaloisCertificate:
    return certify_polynomial(spec.build(), spec)


def _is_odd_square(k: int) -> bool:
    r = math.isqrt(k)
    return r * r == k and r % 2 == 1


def classify_diagonal(m: int, delta: int, family: str) -> str:
    """Predicted Galois group of P(m, m+delta) or Q(m, m+delta), by arithmetic
    on m alone."""
    if m < 1:
        raise ValueError("m must be positive")
    if delta == 0:
        return f"S_{m}"
    if family == "P":
        alt = m % 4 == 0 or ((m + 1) % 2 == 0 and _is_odd_square((m + 1) // 2))
        return f"{'A' if alt else 'S'}_{m}"
    alt = _is_odd_square(m + 1) and m + 1 >= 9
    return f"{'A' if alt else 'S'}_{m + 1}"


# -- checkers for individual statements ------------------------------------


@dataclass
class Check:
    name: str
    ok: bool
    detail: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, **self.detail}


@dataclass
class Report:
    checks: List[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def add(self, name: str, ok: bool, **detail) -> Check:
        c = Check(name, bool(ok), detail)
        self.checks.append(c)
        return c

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    def to_dict(self) -> dict:
        return {"ok": self.ok, **self.info, "checks": [c.to_dict() for c in self.checks]}


EISENSTEIN_BUDGET = 400


def verify_eisenstein_theorem(p: int, n: int, side: str, budget: int = EISENSTEIN_BUDGET) -> Report:
    """Check the valuation lemmas and the single-segment polygon for
    P(p^n, p^n+1) (side "P") or Q(p^n-1, p^n) (side "Q")."""
    if p == 2 or not is_prime(p):
        raise ValueError("p must be an odd prime")
    N = p**n
    if N > budget:
        raise ValueError(f"p^n = {N} exceeds the degree budget {budget}")
    if side == "P":
        f = pade_pair(N, N + 1)[0]
        expected_a0 = (N - 1) // (p - 1)
    elif side == "Q":
        f = pade_pair(N - 1, N)[1]
        expected_a0 = factorial_valuation(p, 2 * N - 1) - factorial_valuation(p, N - 1)
    else:
        raise ValueError("side must be 'P' or 'Q'")
    rep = Report(info={"p": p, "n": n, "side": side, "degree": N})
    vals = [valuation(p, c) for c in f.coeffs]
    v0 = vals[0]
    rep.add(
        "constant-term valuation",
        v0 == expected_a0 == (N - 1) // (p - 1) and math.gcd(v0, p) == 1,
        value=v0,
        expected=expected_a0,
    )

    bad = []
    for j in range(1, N + 1):
        vj = vals[j]
        if side == "P":
            if j == 1:
                # the closed formula needs v_p(0); only the line bound is used
                line = Fraction((N - 1) * (N - j), N * (p - 1))
                if vj < line:
                    bad.append(j)
                continue
            want = v0 + valuation(p, j - 1) - factorial_valuation(p, j)
        else:
            want = v0 + n - valuation(p, j) - factorial_valuation(p, j)
        if vj != want:
            bad.append(j)
    detail = {"failing_indices": bad}
    if side == "P":
        detail["j1_valuation"] = vals[1]
    rep.add("coefficient valuations", not bad, **detail)

    poly = newton_polygon(f, p)
    rep.add(
        "single segment",
        list(poly.vertices) == [(0, v0), (N, 0)],
        vertices=[list(v) for v in poly.vertices],
    )
    rep.add("eisenstein-dumas", eisenstein_dumas(f, p))
    return rep


def near_eisenstein_polynomial(p: int, family: str = "P") -> Polynomial:
    """P(p+1, p+2) or Q(p, p+1)."""
    return pade_pair(p + 1, p + 2)[0] if family == "P" else pade_pair(p, p + 1)[1]


def _iroot_ceil(a: int, k: int) -> int:
    """Smallest integer r >= 0 with r^k >= a."""
    if a <= 1:
        return a
    r = int(round(a ** (1.0 / k))) if a.bit_length() < 1000 else 1 << (a.bit_length() // k + 1)
    while r**k < a:
        r += 1
    while r > 0 and (r - 1) ** k >= a:
        r -= 1
    return r


def fujiwara_bound(f: Polynomial) -> int:
    """Integer B with every complex root of the monic f of modulus <= B."""
    n = f.degree
    return 2 * max((_iroot_ceil(abs(int(f[i])), n - i) for i in range(n)), default=0)


@dataclass(frozen=True)
class NearEisensteinResult:
    p: int
    family: str
    degree: int
    constraints: Tuple[int, ...]
    exclusion: Tuple[int, Optional[Fraction]]
    simple_root_residues: Tuple[int, ...]
    witness_prime: Optional[int]
    integer_root: Optional[int]
    conclusion: str

    def to_dict(self) -> dict:
        lo, hi = self.exclusion
        return {
            "p": self.p,
            "family": self.family,
            "degree": self.degree,
            "constraints": list(self.constraints),
            "exclusion": [lo, None if hi is None else str(hi)],
            "simple_root_residues": list(self.simple_root_residues),
            "witness_prime": self.witness_prime,
            "integer_root": self.integer_root,
            "conclusion": self.conclusion,
        }


def near_eisenstein_analysis(p: int, family: str = "P", aux_bound: int = 200) -> NearEisensteinResult:
    """Decide irreducible versus (linear) x (degree p) for P(p+1,p+2) or
    Q(p,p+1).

    The polygon at p leaves only factor degrees {0, 1, p, p+1}, so the only
    possible splitting has a rational, hence integral, root.  A prime q
    with no root mod q rules that out; otherwise candidates up to the
    Fujiwara bound are tried, restricted to the root residues mod p.
    """
    f = near_eisenstein_polynomial(p, family)
    n = f.degree
    disc = discriminant(f)
    constraints = tuple(sorted(possible_factor_degrees(f, [p], disc)))
    excl = degree_exclusion_interval(f, p)
    roots_p = roots_mod(reduce_mod(f, p))
    simple = tuple(r.residue for r in roots_p if r.simple)
    residues = {r.residue for r in roots_p}

    witness = None
    for q in primes_up_to(aux_bound):
        if not roots_mod(reduce_mod(f, q)):
            witness = q
            break
    root = None
    if witness is None:
        B = fujiwara_bound(f)
        start = -B
        for r in range(start, B + 1):
            if r % p in residues and evaluate(f, r) == 0:
                root = r
                break
    if witness is not None or root is None:
        conclusion = "irreducible"
    else:
        conclusion = f"linear x degree-{n - 1}"
    return NearEisensteinResult(
        p, family, n, constraints, (excl.lower, excl.upper), simple, witness, root, conclusion
    )


def _divisors(n: int) -> List[int]:
    divs = [1]
    for q, e in factor_integer(n).items():
        divs = [d * q**k for d in divs for k in range(e + 1)]
    return divs


def integer_roots_by_divisors(f: Polynomial, signs=(-1, 1)) -> List[int]:
    """Exhaustive rational-root search for a monic integral f with f(0) != 0."""
    out = []
    for d in _divisors(abs(int(f[0]))):
        for s in signs:
            if evaluate(f, s * d) == 0:
                out.append(s * d)
    return sorted(out)


def near_eisenstein_oracle(p: int, family: str = "P") -> str:
    """Independent decision: degree sieve over 25 unramified primes plus a
    divisor-based integer root search."""
    f = near_eisenstein_polynomial(p, family)
    n = f.degree
    # P has positive coefficients, so any real root is negative
    signs = (-1,) if family == "P" else (-1, 1)
    if integer_roots_by_divisors(f, signs):
        return f"linear x degree-{n - 1}"
    disc = Fraction(discriminant(f))
    survivors = set(range(n + 1))
    q, count = 2, 0
    while count < SIEVE_UNRAMIFIED_PRIMES:
        if is_prime(q) and _unramified(q, f, disc):
            count += 1
            survivors &= local_degree_set(f, q, disc)
        q += 1
    return "irreducible" if survivors <= {0, n} else "undetermined"


@dataclass(frozen=True)
class PrimeGapReport:
    lo: int
    hi: int
    failures: Tuple[int, ...]

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_prime_gap(m_lo: int, m_hi: int) -> PrimeGapReport:
    """For each m in [m_lo, m_hi], is there a prime in (2m/3, m - 3)?"""
    if not 2 <= m_lo <= m_hi:
        raise ValueError("need 2 <= m_lo <= m_hi")
    primes = primes_up_to(max(m_hi, 2))
    # count[k] = number of primes <= k
    count = [0] * (m_hi + 1)
    idx = 0
    for k in range(m_hi + 1):
        while idx < len(primes) and primes[idx] <= k:
            idx += 1
        count[k] = idx
    failures = []
    for m in range(m_lo, m_hi + 1):
        hi = m - 4  # largest integer < m - 3
        lo = (2 * m) // 3  # primes must exceed 2m/3
        if hi <= lo or count[hi] - count[lo] == 0:
            failures.append(m)
    return PrimeGapReport(m_lo, m_hi, tuple(failures))
