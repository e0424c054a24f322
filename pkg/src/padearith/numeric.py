"""
Exact integer and rational helpers: p-adic valuations, base-p digits,
squarefree parts (square classes), primality and prime sieving.

Rationals are :class:`fractions.Fraction`; plain ``int`` is accepted wherever a
rational is expected.
"""

from __future__ import annotations

import math
import random
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Union

Rational = Union[int, Fraction]

#: trial-division bound used by :func:`factor_integer` before Pollard rho
TRIAL_BOUND = 10**6

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def as_fraction(x: Rational) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def _int_valuation(p: int, n: int) -> int:
    n = abs(n)
    k = 0
    # strip p^(2^i) blocks first so that huge powers cost O(log k) divisions
    if n % p == 0:
        powers = [p]
        while n % (powers[-1] * powers[-1]) == 0:
            powers.append(powers[-1] * powers[-1])
        for i in range(len(powers) - 1, -1, -1):
            q, r = divmod(n, powers[i])
            if r == 0:
                n = q
                k += 1 << i
        while n % p == 0:
            n //= p
            k += 1
    return k


def valuation(p: int, x: Rational) -> int:
    """The p-adic valuation of a nonzero rational.

    >>> valuation(3, 210)
    1
    >>> valuation(3, Fraction(25, 24))
    -1
    """
    x = as_fraction(x)
    if x == 0:
        raise ValueError("valuation of zero undefined")
    return _int_valuation(p, x.numerator) - _int_valuation(p, x.denominator)


@dataclass(frozen=True)
class DigitExpansion:
    """Little-endian base-``prime`` digits of a nonnegative integer."""

    prime: int
    digits: tuple

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)

    def value(self) -> int:
        return sum(d * self.prime**k for k, d in enumerate(self.digits))


def base_digits(p: int, m: int) -> DigitExpansion:
    if m < 0:
        raise ValueError("base_digits needs m >= 0")
    digits = []
    while m:
        m, d = divmod(m, p)
        digits.append(d)
    return DigitExpansion(p, tuple(digits))


def factorial_valuation(p: int, m: int) -> int:
    """v_p(m!) via Legendre's digit-sum formula."""
    if m < 0:
        raise ValueError("factorial_valuation needs m >= 0")
    return (m - base_digits(p, m).digit_sum) // (p - 1)


def factorial_valuation_floor_sum(p: int, m: int) -> int:
    """v_p(m!) as the sum of floor(m / p^i); used as a cross-check."""
    total, q = 0, p
    while q <= m:
        total += m // q
        q *= p
    return total


# -- primes ----------------------------------------------------------------


@lru_cache(maxsize=8)
def _sieve(limit: int) -> tuple:
    if limit < 2:
        return ()
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return tuple(i for i, f in enumerate(flags) if f)


def primes_up_to(limit: int) -> tuple:
    """All primes <= limit (sieve of Eratosthenes, cached)."""
    # round the cache key up so nearby requests share one sieve
    size = 1 << max(10, int(limit).bit_length())
    primes = _sieve(size)
    return primes[: bisect_right(primes, limit)]


def is_prime(n: int) -> bool:
    """Deterministic primality test (Miller-Rabin with the first 12 prime
    bases, exact for n < 3.3e24)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_in_interval(lo: Rational, hi: Rational) -> List[int]:
    """Primes q with lo < q < hi, ascending (open interval)."""
    lo, hi = as_fraction(lo), as_fraction(hi)
    if not lo < hi:
        raise ValueError("primes_in_interval needs lo < hi")
    top = math.ceil(hi) - 1
    if top < 2:
        return []
    primes = primes_up_to(top)
    start = bisect_left(primes, math.floor(lo) + 1)
    return list(primes[start:])


def next_primes(start: int, count: int, skip: Iterable[int] = ()) -> List[int]:
    """The first ``count`` primes >= start not in ``skip``."""
    skip = set(skip)
    out = []
    q = max(start, 2)
    while len(out) < count:
        if is_prime(q) and q not in skip:
            out.append(q)
        q += 1
    return out


# -- factoring and square classes -----------------------------------------


def _pollard_rho(n: int, rng: random.Random) -> int:
    if n % 2 == 0:
        return 2
    while True:
        c = rng.randrange(1, n)
        y = rng.randrange(0, n)
        m, g, r, q = 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factor_integer(n: int, trial_bound: int = TRIAL_BOUND) -> dict:
    """Prime factorization of |n| as {prime: exponent}.

    Trial division by sieved primes up to ``trial_bound``, stopping as soon as
    the cofactor is 1; Pollard rho handles whatever survives.
    """
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict = {}
    if n == 1:
        return out
    for p in primes_up_to(trial_bound):
        if p * p > n:
            break
        if n % p == 0:
            e = _int_valuation(p, n)
            out[p] = e
            n //= p**e
            if n == 1:
                return out
    if n == 1:
        return out
    rng = random.Random(0)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m, rng)
        stack.extend((d, m // d))
    return out


@dataclass(frozen=True)
class SquareClass:
    """A class in Q^x / (Q^x)^2, represented by its squarefree integer."""

    representative: int

    def __post_init__(self):
        if self.representative == 0:
            raise ValueError("square class of zero undefined")

    @property
    def is_square(self) -> bool:
        return self.representative == 1

    def __str__(self):
        return str(self.representative)


def squarefree_part(x: Rational) -> SquareClass:
    """The squarefree integer s with x = s * t^2 for a rational t.

    >>> squarefree_part(-16200)
    SquareClass(representative=-2)
    """
    x = as_fraction(x)
    if x == 0:
        raise ValueError("squarefree part of zero undefined")
    sign = -1 if x < 0 else 1
    rep = 1
    # a/b and a*b share a class; Fraction keeps a, b coprime
    for part in (x.numerator, x.denominator):
        for p, e in factor_integer(part).items():
            if e % 2:
                rep *= p
    return SquareClass(sign * rep)
