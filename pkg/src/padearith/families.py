"""
The truncated exponential, its Padé approximants and the (shifted)
generalized Laguerre polynomials, with the identities tying them together.

Conventions
-----------
``exp_poly(n)``        e_n(x) = n! * sum_{j<=n} x^j / j!
``pade_pair(u, v)``    (P(u,v,x), Q(u,v,x)); e_n * Q = c * P + O(x^(u+v+1))
``glp(n, alpha)``      L_n^(alpha)(x) = (-1)^n sum_j binom(n+alpha, n-j) (-x)^j / j!
``shifted_glp(n, r)``  n! * L_n^(-1-n-r)(x), integral and monic

so that shifted_glp(u, v) == P(u,v,x) and shifted_glp(n, 0) == e_n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, factorial
from typing import Optional, Tuple

from .numeric import Rational, as_fraction
from .poly import (
    ModPolynomial,
    Polynomial,
    reduce_mod,
    substitute_neg,
    truncated_mul,
)


class Family(str, Enum):
    P = "P"
    Q = "Q"
    EXP = "e"
    GLP = "L"
    SHIFTED_GLP = "LL"


@dataclass(frozen=True)
class FamilySpec:
    """Which member of which family a polynomial is.

    Only the parameters relevant to ``family`` are meaningful; P/Q use
    ``u, v``, EXP uses ``n``, SHIFTED_GLP uses ``n, r`` and GLP ``n, alpha``.
    """

    family: Family
    u: int = 0
    v: int = 0
    n: int = 0
    r: int = 0
    alpha: Fraction = field(default=Fraction(0))

    def __post_init__(self):
        fam = Family(self.family)
        object.__setattr__(self, "family", fam)
        if fam in (Family.P, Family.Q):
            if self.u < 0 or self.v < 0 or self.u + self.v < 1:
                raise ValueError("P/Q need u, v >= 0 with u + v >= 1")
        elif fam is Family.EXP and self.n < 1:
            raise ValueError("e_n needs n >= 1")
        elif fam in (Family.GLP, Family.SHIFTED_GLP) and self.n < 1:
            raise ValueError("Laguerre families need n >= 1")

    @classmethod
    def P(cls, u: int, v: int) -> "FamilySpec":
        return cls(Family.P, u=u, v=v)

    @classmethod
    def Q(cls, u: int, v: int) -> "FamilySpec":
        return cls(Family.Q, u=u, v=v)

    @classmethod
    def exp(cls, n: int) -> "FamilySpec":
        return cls(Family.EXP, n=n)

    @classmethod
    def shifted(cls, n: int, r: int) -> "FamilySpec":
        return cls(Family.SHIFTED_GLP, n=n, r=r)

    @property
    def degree(self) -> int:
        fam = self.family
        if fam is Family.P:
            return self.u
        if fam is Family.Q:
            return self.v
        return self.n

    def as_shifted(self) -> Optional[Tuple[int, int, bool]]:
        """(n, r, negated) with the polynomial equal to shifted_glp(n, r)
        evaluated at x (or at -x when ``negated``), if there is such a form."""
        fam = self.family
        if fam is Family.P:
            return self.u, self.v, False
        if fam is Family.Q:
            return self.v, self.u, True
        if fam is Family.EXP:
            return self.n, 0, False
        if fam is Family.SHIFTED_GLP:
            return self.n, self.r, False
        return None

    def build(self) -> Polynomial:
        fam = self.family
        if fam is Family.P:
            return pade_pair(self.u, self.v)[0]
        if fam is Family.Q:
            return pade_pair(self.u, self.v)[1]
        if fam is Family.EXP:
            return exp_poly(self.n)
        if fam is Family.SHIFTED_GLP:
            return shifted_glp(self.n, self.r)
        return glp(self.n, self.alpha)

    def label(self) -> str:
        fam = self.family
        if fam in (Family.P, Family.Q):
            return f"{fam.value}({self.u},{self.v})"
        if fam is Family.EXP:
            return f"e_{self.n}"
        if fam is Family.SHIFTED_GLP:
            return f"LL_{self.n}<{self.r}>"
        return f"L_{self.n}^({self.alpha})"


def exp_poly(n: int) -> Polynomial:
    """e_n(x), with coefficient n!/j! on x^j.

    n = 0 gives the constant 1, which is degenerate but allowed.
    """
    if n < 0:
        raise ValueError("exp_poly needs n >= 0")
    coeffs = [1] * (n + 1)
    # n!/j! built downward: n!/n! = 1, n!/(n-1)! = n, ...
    for j in range(n - 1, -1, -1):
        coeffs[j] = coeffs[j + 1] * (j + 1)
    return Polynomial(coeffs)


def _pade_numerator(u: int, v: int) -> Polynomial:
    # (u+v-j)!/v! * binom(u, j); the falling product avoids huge factorials
    coeffs = []
    for j in range(u + 1):
        falling = 1
        for t in range(v + 1, u + v - j + 1):
            falling *= t
        coeffs.append(falling * comb(u, j))
    return Polynomial(coeffs)


def pade_pair(u: int, v: int) -> Tuple[Polynomial, Polynomial]:
    """The normalized (u, v) Padé numerator and denominator of e_n.

    >>> pade_pair(1, 2)
    (Polynomial([3, 1]), Polynomial([6, -4, 1]))
    """
    if u < 0 or v < 0:
        raise ValueError("pade_pair needs u, v >= 0")
    P = _pade_numerator(u, v)
    Q = substitute_neg(_pade_numerator(v, u))
    return P, Q


def _gen_binom(top: Fraction, k: int) -> Fraction:
    """binom(top, k) for rational top and integer k >= 0."""
    if k < 0:
        return Fraction(0)
    num = Fraction(1)
    for i in range(k):
        num *= top - i
    return num / factorial(k)


def glp(n: int, alpha: Rational) -> Polynomial:
    """L_n^(alpha)(x) with rational coefficients; leading coefficient 1/n!."""
    if n < 1:
        raise ValueError("glp needs n >= 1")
    alpha = as_fraction(alpha)
    sign = -1 if n % 2 else 1
    coeffs = []
    for j in range(n + 1):
        c = _gen_binom(n + alpha, n - j) / factorial(j)
        if j % 2:
            c = -c
        coeffs.append(sign * c)
    return Polynomial(coeffs)


def shifted_glp(n: int, r: int) -> Polynomial:
    """n! * L_n^(-1-n-r)(x) = sum_j binom(n, j) (r+1)(r+2)...(r+n-j) x^j."""
    if n < 1:
        raise ValueError("shifted_glp needs n >= 1")
    coeffs = []
    for j in range(n + 1):
        rising = 1
        for t in range(1, n - j + 1):
            rising *= r + t
        coeffs.append(comb(n, j) * rising)
    return Polynomial(coeffs)


def closed_form_disc(n: int, r: int) -> int:
    """disc shifted_glp(n, r)
    = (-1)^(n(n-1)/2) * prod_{j=1}^{n} j^j * prod_{j=1}^{n-1} (r+j)^(n-j)."""
    if n < 1:
        raise ValueError("closed_form_disc needs n >= 1")
    return _disc_product(n, r, (-1) ** ((n * (n - 1) // 2) % 2))


def printed_sign_disc(u: int, v: int) -> int:
    """The same product with the sign (-1)^u instead.  Kept only as a negative
    control: it disagrees with the true discriminant, e.g. at (2, 3)."""
    return _disc_product(u, v, (-1) ** (u % 2))


def _disc_product(n: int, r: int, sign: int) -> int:
    out = sign
    for j in range(1, n + 1):
        out *= j**j
    for j in range(1, n):
        out *= (r + j) ** (n - j)
    return out


def spec_discriminant(spec: FamilySpec) -> Optional[int]:
    """Closed-form discriminant for any family member with a shifted form.

    The substitution x -> -x never changes a discriminant.
    """
    form = spec.as_shifted()
    if form is None:
        return None
    n, r, _ = form
    if r < 0:
        return None
    return closed_form_disc(n, r)


@dataclass(frozen=True)
class PadeIdentityReport:
    u: int
    v: int
    n: int
    scalar: Fraction
    ok: bool


def verify_pade_identity(u: int, v: int, n: int) -> PadeIdentityReport:
    """Check e_n * Q(u,v) == c * P(u,v) mod x^(u+v+1) with c = n! v!/u!."""
    if u + v < 1 or n < u + v:
        raise ValueError("need u + v >= 1 and n >= u + v")
    P, Q = pade_pair(u, v)
    e = exp_poly(n)
    c = Fraction(e[0] * Q[0], P[0])
    k = u + v + 1
    lhs = truncated_mul(e, Q, k)
    rhs = P.truncate(k) * c
    return PadeIdentityReport(u, v, n, c, lhs == rhs)


@dataclass(frozen=True)
class SchurCongruenceReport:
    family: str
    m: int
    delta: int
    p: int
    k: int
    u: int
    scalar: Optional[int]
    ok: bool


def diagonal(family: str, m: int, delta: int) -> Polynomial:
    """P(m, m+delta, x) or Q(m, m+delta, x)."""
    P, Q = pade_pair(m, m + delta)
    return P if family == "P" else Q


def _scalar_multiple(big: ModPolynomial, small: ModPolynomial) -> Optional[int]:
    """c in F_p^x with big == c * small, as a symmetric residue, or None."""
    if not small or big.degree != small.degree:
        return None
    p = big.prime
    c = big.lc * pow(small.lc, -1, p) % p
    if small.scale(c) != big:
        return None
    return c - p if c > p // 2 else c


def schur_congruence_check(family: str, m: int, p: int, delta: int = 1) -> SchurCongruenceReport:
    """Check F(m, m+delta) == c * x^(kp) * F(u, u+delta) mod p, m = u + kp.

    The congruence only holds up to a unit c mod p, which is reported
    (for example Q(3,4) needs c = -1 at p = 3).
    """
    if family not in ("P", "Q"):
        raise ValueError("family must be 'P' or 'Q'")
    if m < 1:
        raise ValueError("m must be positive")
    k, u = divmod(m, p)
    big = reduce_mod(diagonal(family, m, delta), p)
    if u + delta == 0:
        small_poly = Polynomial([1])
    else:
        small_poly = diagonal(family, u, delta)
    small = reduce_mod(small_poly, p).shift(k * p)
    c = _scalar_multiple(big, small)
    return SchurCongruenceReport(family, m, delta, p, k, u, c, c is not None)

