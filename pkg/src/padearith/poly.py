"""
Dense univariate polynomials with exact coefficients, plus arithmetic and
factorization over prime fields.

Coefficients are stored ascending (index j holds the coefficient of x^j) with
no trailing zeros; the zero polynomial has no coefficients.  Integer
coefficients are the normal case, but :class:`fractions.Fraction` entries are
allowed so that rational families (Laguerre polynomials with rational
parameter) share the same type.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Dict, Iterable, List, Sequence, Tuple

from .numeric import Rational, as_fraction

KARATSUBA_CUTOFF = 32

#: seed used for equal-degree splitting unless the caller passes one
DEFAULT_SEED = 1


def _normalize(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def _trim(cs: List) -> List:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _school_mul(a: Sequence, b: Sequence) -> List:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _karatsuba(a: Sequence, b: Sequence) -> List:
    if len(a) < KARATSUBA_CUTOFF or len(b) < KARATSUBA_CUTOFF:
        return _school_mul(a, b)
    h = max(len(a), len(b)) // 2
    a0, a1 = a[:h], a[h:]
    b0, b1 = b[:h], b[h:]
    z0 = _karatsuba(a0, b0) if a0 and b0 else []
    z2 = _karatsuba(a1, b1) if a1 and b1 else []
    sa = _add_lists(a0, a1)
    sb = _add_lists(b0, b1)
    z1 = _karatsuba(sa, sb) if sa and sb else []
    z1 = _sub_lists(_sub_lists(z1, z0), z2)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] += c
    for i, c in enumerate(z1):
        out[i + h] += c
    for i, c in enumerate(z2):
        out[i + 2 * h] += c
    return out


def _add_lists(a: Sequence, b: Sequence) -> List:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return out


def _sub_lists(a: Sequence, b: Sequence) -> List:
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return out


class Polynomial:
    """An immutable dense polynomial over Z (or Q).

    >>> Polynomial([3, 1]) * Polynomial([-3, 1])
    Polynomial([-9, 0, 1])
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = _trim([_normalize(c) for c in coeffs])
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, k: int, c: Rational = 1) -> "Polynomial":
        return cls([0] * k + [c])

    @classmethod
    def from_text(cls, text: str) -> "Polynomial":
        """Parse ascending space-separated decimal coefficients."""
        return cls(int(tok) for tok in text.split())

    @classmethod
    def from_json(cls, data) -> "Polynomial":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(int(tok) for tok in data)

    def to_text(self) -> str:
        return " ".join(str(c) for c in self.coeffs) if self.coeffs else "0"

    def to_json(self) -> List[str]:
        return [str(c) for c in self.coeffs]

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, j: int):
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Polynomial([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for j in range(self.degree, -1, -1):
            c = self.coeffs[j]
            if c == 0:
                continue
            mono = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{'*' if mono else ''}{mono}"
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    # ring operations

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(_add_lists(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial(_sub_lists(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        return Polynomial(_karatsuba(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out, base = Polynomial([1]), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __call__(self, x: Rational):
        return evaluate(self, x)

    # structure

    def derivative(self) -> "Polynomial":
        return Polynomial(j * c for j, c in enumerate(self.coeffs) if j)

    def truncate(self, k: int) -> "Polynomial":
        """f mod x^k."""
        return Polynomial(self.coeffs[:k])

    def shift(self, k: int) -> "Polynomial":
        """x^k * f."""
        return Polynomial([0] * k + list(self.coeffs)) if self.coeffs else self

    def content(self) -> int:
        """gcd of the (integer) coefficients, positive; 0 for the zero poly."""
        return reduce(gcd, (int(c) for c in self.coeffs), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def order_at_zero(self) -> int:
        """Largest k with x^k dividing f (f nonzero)."""
        for j, c in enumerate(self.coeffs):
            if c:
                return j
        raise ValueError("zero polynomial")

    def strip_x(self) -> "Polynomial":
        """f / x^k for the largest such k."""
        return Polynomial(self.coeffs[self.order_at_zero() :])


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def substitute_neg(f: Polynomial) -> Polynomial:
    """f(-x)."""
    return Polynomial(-c if j % 2 else c for j, c in enumerate(f.coeffs))


def truncated_mul(f: Polynomial, g: Polynomial, k: int) -> Polynomial:
    """f*g with every term of degree >= k dropped."""
    if k <= 0:
        return Polynomial()
    return (f.truncate(k) * g.truncate(k)).truncate(k)


def evaluate(f: Polynomial, x: Rational):
    """Exact Horner evaluation; returns int when everything is integral."""
    acc = 0
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return _normalize(acc) if isinstance(acc, Fraction) else acc


# -- resultants and discriminants ------------------------------------------


def _prem(a: List[int], b: List[int]) -> List[int]:
    """Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, descending lists."""
    r = list(a)
    db = len(b) - 1
    lb = b[0]
    e = len(a) - len(b) + 1
    while r and len(r) - 1 >= db:
        lr = r[0]
        r = [lb * c for c in r]
        for i in range(len(b)):
            r[i] -= lr * b[i]
        r.pop(0)
        e -= 1
        while r and r[0] == 0:
            r.pop(0)
    return [c * lb**e for c in r] if e > 0 else r


def _clear_denominators(f: Polynomial) -> Tuple[List[int], Fraction]:
    """Integer coefficient list (ascending) and the scale s with f = list / s."""
    den = 1
    for c in f.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // gcd(den, c.denominator)
    return [int(c * den) for c in f.coeffs], Fraction(den)


def resultant(f: Polynomial, g: Polynomial) -> Rational:
    """Res(f, g) by the subresultant pseudo-remainder sequence.

    Works over Z internally; rational inputs are scaled to integers first.
    """
    if not f or not g:
        return 0
    fi, sf = _clear_denominators(f)
    gi, sg = _clear_denominators(g)
    m, n = len(fi) - 1, len(gi) - 1
    scale = sf**n * sg**m
    return _normalize(Fraction(_resultant_int(fi, gi)) / scale)


def _resultant_int(f: List[int], g: List[int]) -> int:
    m, n = len(f) - 1, len(g) - 1
    if m == 0:
        return f[0] ** n
    if n == 0:
        return g[0] ** m
    sign = 1
    if m < n:
        f, g, m, n = g, f, n, m
        if (m * n) % 2:
            sign = -1
    a = reduce(gcd, f, 0)
    b = reduce(gcd, g, 0)
    A = [c // a for c in reversed(f)]
    B = [c // b for c in reversed(g)]
    t = a**n * b**m
    gg = h = 1
    # invariant: h is an exact integer at every step (subresultant theory)
    while True:
        da, db = len(A) - 1, len(B) - 1
        d = da - db
        if da % 2 and db % 2:
            sign = -sign
        R = _prem(A, B)
        if not R:
            return 0
        A = B
        div = gg * h**d
        B = [c // div for c in R]
        gg = A[0]
        if d == 0:
            pass
        elif d == 1:
            h = gg
        else:
            h = gg**d // h ** (d - 1)
        if len(B) == 1:
            break
    da = len(A) - 1
    lb = B[0]
    if da == 1:
        h = lb
    else:
        h = lb**da // h ** (da - 1)
    return sign * t * h


def discriminant(f: Polynomial) -> Rational:
    """disc f = (-1)^(n(n-1)/2) Res(f, f') / lc(f)."""
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    res = resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return _normalize(Fraction(sign) * as_fraction(res) / as_fraction(f.lc))


# -- arithmetic over F_p ----------------------------------------------------
# Internal helpers work on ascending lists of residues with no trailing zeros.


def _mtrim(a: List[int]) -> List[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _madd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _mtrim(out)


def _msub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _mtrim(out)


def _mmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _mtrim([c % p for c in out])


def _mscale(a, c, p):
    return _mtrim([x * c % p for x in a])


def _mdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero mod p")
    r = list(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    if len(r) - 1 < db:
        return [], _mtrim(r)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            for j in range(db + 1):
                r[i - db + j] = (r[i - db + j] - c * b[j]) % p
    return _mtrim(q), _mtrim(r[:db])


def _mmod(a, b, p):
    return _mdivmod(a, b, p)[1]


def _mmonic(a, p):
    if not a:
        return a
    return _mscale(a, pow(a[-1], -1, p), p)


def _mgcd(a, b, p):
    while b:
        a, b = b, _mmod(a, b, p)
    return _mmonic(a, p)


def _mpowmod(base, e, mod, p):
    out = [1]
    base = _mmod(base, mod, p)
    while e:
        if e & 1:
            out = _mmod(_mmul(out, base, p), mod, p)
        e >>= 1
        if e:
            base = _mmod(_mmul(base, base, p), mod, p)
    return out


def _mderiv(a, p):
    return _mtrim([j * c % p for j, c in enumerate(a)][1:])


def _meval(a, x, p):
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


@dataclass(frozen=True)
class ModPolynomial:
    """A polynomial over the field with ``prime`` elements (ascending residues)."""

    prime: int
    coeffs: tuple

    def __post_init__(self):
        cs = _mtrim([int(c) % self.prime for c in self.coeffs])
        object.__setattr__(self, "coeffs", tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __mul__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return ModPolynomial(self.prime, _mmul(self.coeffs, other.coeffs, self.prime))

    def __add__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return ModPolynomial(self.prime, _madd(self.coeffs, other.coeffs, self.prime))

    def __sub__(self, other: "ModPolynomial") -> "ModPolynomial":
        self._check(other)
        return ModPolynomial(self.prime, _msub(self.coeffs, other.coeffs, self.prime))

    def __pow__(self, k: int) -> "ModPolynomial":
        out = [1]
        for _ in range(k):
            out = _mmul(out, list(self.coeffs), self.prime)
        return ModPolynomial(self.prime, out)

    def scale(self, c: int) -> "ModPolynomial":
        return ModPolynomial(self.prime, _mscale(self.coeffs, c, self.prime))

    def shift(self, k: int) -> "ModPolynomial":
        if not self.coeffs:
            return self
        return ModPolynomial(self.prime, (0,) * k + self.coeffs)

    def monic(self) -> "ModPolynomial":
        return ModPolynomial(self.prime, _mmonic(list(self.coeffs), self.prime))

    def __call__(self, x: int) -> int:
        return _meval(self.coeffs, x, self.prime)

    def _check(self, other):
        if other.prime != self.prime:
            raise ValueError("mixing residues modulo different primes")

    def __str__(self):
        return f"{Polynomial(self.coeffs)} (mod {self.prime})"


def reduce_mod(f: Polynomial, p: int) -> ModPolynomial:
    """Coefficientwise reduction of an integral polynomial mod p."""
    if not f.is_integral():
        raise ValueError("reduce_mod needs integer coefficients")
    return ModPolynomial(p, f.coeffs)


@dataclass(frozen=True)
class FactorizationModP:
    """unit * prod(factor^multiplicity) over F_p, factors monic irreducible."""

    prime: int
    unit: int
    factors: Tuple[Tuple[ModPolynomial, int], ...]
    seed: int = DEFAULT_SEED

    def expand(self) -> ModPolynomial:
        out = ModPolynomial(self.prime, (self.unit,))
        for g, e in self.factors:
            out = out * g**e
        return out

    def degrees(self) -> List[int]:
        """Factor degrees with multiplicity, ascending."""
        return sorted(g.degree for g, e in self.factors for _ in range(e))


def _squarefree_decomposition(f: List[int], p: int) -> List[Tuple[List[int], int]]:
    """Monic squarefree factors with multiplicities (Yun's algorithm, char p)."""
    out: List[Tuple[List[int], int]] = []
    f = _mmonic(f, p)
    mult = 1

    def recurse(f, mult):
        if len(f) <= 1:
            return
        df = _mderiv(f, p)
        if not df:
            # f is a p-th power: f(x) = g(x^p) = g(x)^p over F_p
            g = [f[i] for i in range(0, len(f), p)]
            recurse(g, mult * p)
            return
        c = _mgcd(f, df, p)
        w = _mdivmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _mgcd(w, c, p)
            z = _mdivmod(w, y, p)[0]
            if len(z) > 1:
                out.append((_mmonic(z, p), i * mult))
            i += 1
            w = y
            c = _mdivmod(c, y, p)[0]
        if len(c) > 1:
            g = [c[i] for i in range(0, len(c), p)]
            recurse(g, mult * p)

    recurse(f, mult)
    return out


def _distinct_degree(f: List[int], p: int) -> List[Tuple[List[int], int]]:
    """Split a monic squarefree f into products of irreducibles of equal degree."""
    out = []
    h = [0, 1]
    x = [0, 1]
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = _mpowmod(h, p, f, p)
        g = _mgcd(f, _msub(h, x, p), p)
        if len(g) > 1:
            out.append((g, d))
            f = _mdivmod(f, g, p)[0]
            h = _mmod(h, f, p)
    if len(f) > 1:
        out.append((f, len(f) - 1))
    return out


def _equal_degree(f: List[int], d: int, p: int, rng: random.Random) -> List[List[int]]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = len(f) - 1
    if n == d:
        return [f]
    while True:
        a = _mtrim([rng.randrange(p) for _ in range(n)])
        if len(a) < 2:
            continue
        if p == 2:
            # trace map a + a^2 + ... + a^(2^(d-1))
            t, s = a, a
            for _ in range(d - 1):
                s = _mmod(_mmul(s, s, p), f, p)
                t = _madd(t, s, p)
            g = _mgcd(f, t, p)
        else:
            b = _mpowmod(a, (p**d - 1) // 2, f, p)
            g = _mgcd(f, _msub(b, [1], p), p)
        if 1 < len(g) < len(f):
            q = _mdivmod(f, g, p)[0]
            return _equal_degree(g, d, p, rng) + _equal_degree(q, d, p, rng)


def is_irreducible_mod(f: ModPolynomial) -> bool:
    if f.degree < 1:
        return False
    p = f.prime
    cs = list(f.coeffs)
    if len(_mgcd(cs, _mderiv(cs, p), p)) > 1:
        return False
    parts = _distinct_degree(_mmonic(cs, p), p)
    return len(parts) == 1 and parts[0][1] == f.degree


def factor_mod(f: ModPolynomial, seed: int = DEFAULT_SEED) -> FactorizationModP:
    """Complete factorization over F_p into monic irreducibles.

    >>> factor_mod(ModPolynomial(5, (1, 0, 1))).degrees()
    [1, 1]
    """
    if not f:
        raise ValueError("cannot factor the zero polynomial")
    p = f.prime
    rng = random.Random(seed)
    counts: Dict[tuple, int] = Counter()
    for sq, mult in _squarefree_decomposition(list(f.coeffs), p):
        for block, d in _distinct_degree(sq, p):
            for g in _equal_degree(block, d, p, rng):
                counts[tuple(g)] += mult
    factors = tuple(
        (ModPolynomial(p, g), e) for g, e in sorted(counts.items(), key=lambda t: (len(t[0]), t[0]))
    )
    for g, _ in factors:
        assert is_irreducible_mod(g), "factor_mod produced a reducible factor"
    return FactorizationModP(p, f.lc, factors, seed)


def degree_pattern_mod(f: Polynomial, p: int) -> List[int]:
    """Degrees of the irreducible factors of f mod p (f squarefree mod p).

    Only distinct-degree splitting is needed for the pattern, so this is the
    cheap path used when sampling many primes.
    """
    g = list(reduce_mod(f, p).coeffs)
    out = []
    for block, d in _distinct_degree(_mmonic(g, p), p):
        out.extend([d] * ((len(block) - 1) // d))
    return sorted(out)


def is_squarefree_mod(f: Polynomial, p: int) -> bool:
    g = list(reduce_mod(f, p).coeffs)
    return len(g) == f.degree + 1 and len(_mgcd(g, _mderiv(g, p), p)) == 1


@dataclass(frozen=True)
class RootMod:
    residue: int
    multiplicity: int

    @property
    def simple(self) -> bool:
        return self.multiplicity == 1


def roots_mod(f: ModPolynomial) -> List[RootMod]:
    """All roots in [0, p-1] with multiplicities, ascending."""
    if not f:
        raise ValueError("zero polynomial has every residue as a root")
    p = f.prime
    out = []
    for r in range(p):
        cs = list(f.coeffs)
        k = 0
        while cs and _meval(cs, r, p) == 0:
            cs, _ = _mdivmod(cs, [(-r) % p, 1], p)
            k += 1
        if k:
            out.append(RootMod(r, k))
    return out
