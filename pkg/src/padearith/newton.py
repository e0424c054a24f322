"""
p-adic Newton polygons of integral polynomials and what they imply about
local factor degrees.

The polygon is the lower convex hull of the points (j, v_p(a_j)) over the
nonzero coefficients, read left to right (constant term first).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, List, NamedTuple, Optional, Sequence, Set, Tuple

from .numeric import factor_integer, valuation
from .poly import Polynomial, degree_pattern_mod, discriminant, is_squarefree_mod


@dataclass(frozen=True)
class Segment:
    slope: Fraction
    length: int

    @property
    def denominator(self) -> int:
        """b for a slope -a/b in lowest terms; local factors inside the
        segment have degrees divisible by b."""
        return self.slope.denominator


@dataclass(frozen=True)
class NewtonPolygon:
    prime: int
    points: Tuple[Tuple[int, int], ...]
    vertices: Tuple[Tuple[int, int], ...]
    segments: Tuple[Segment, ...]

    @property
    def flatness(self) -> int:
        return sum(s.length for s in self.segments if s.slope == 0)

    @property
    def steepness(self) -> Fraction:
        return max((abs(s.slope) for s in self.segments), default=Fraction(0))

    @property
    def min_valuation_indices(self) -> Tuple[int, ...]:
        low = min(v for _, v in self.points)
        return tuple(j for j, v in self.points if v == low)

    @property
    def is_trivial(self) -> bool:
        return self.steepness == 0

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "vertices": [[j, v] for j, v in self.vertices],
            "segments": [{"slope": str(s.slope), "length": s.length} for s in self.segments],
            "flatness": self.flatness,
            "steepness": str(self.steepness),
        }


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def newton_polygon(f: Polynomial, p: int) -> NewtonPolygon:
    """Lower convex hull of (j, v_p(a_j)); zero coefficients give no point.

    >>> [str(s.slope) for s in newton_polygon(Polynomial([210, 90, 15, 1]), 3).segments]
    ['-1/3']
    """
    if not f:
        raise ValueError("Newton polygon of the zero polynomial")
    points = tuple((j, valuation(p, c)) for j, c in enumerate(f.coeffs) if c)
    hull: List[Tuple[int, int]] = []
    for pt in points:
        # pop on collinear too, so only corners survive
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    segments = tuple(
        Segment(Fraction(b[1] - a[1], b[0] - a[0]), b[0] - a[0]) for a, b in zip(hull, hull[1:])
    )
    return NewtonPolygon(p, points, tuple(hull), segments)


def _primitive_core(f: Polynomial) -> Polynomial:
    if not f.is_integral():
        raise ValueError("expected integer coefficients")
    g = f.strip_x()
    c = g.content()
    return Polynomial(a // c for a in g.coeffs)


def relevant_primes(f: Polynomial) -> List[int]:
    """Primes at which the polygon of the primitive, x-free part of f can be
    nontrivial: those dividing a_0 * lc."""
    g = _primitive_core(f)
    primes = set(factor_integer(g[0]))
    primes.update(factor_integer(g.lc))
    return sorted(primes)


def newton_index(f: Polynomial) -> int:
    """lcm of all slope denominators over all primes.

    Only primes dividing a_0 * lc(f) can contribute (after removing the
    content), so those are the only ones visited.
    """
    if not f:
        raise ValueError("Newton index of the zero polynomial")
    if f[0] == 0:
        raise ValueError("f(0) = 0; strip the power of x first")
    g = _primitive_core(f)
    out = 1
    for p in relevant_primes(g):
        for s in newton_polygon(g, p).segments:
            out = lcm(out, s.denominator)
    return out


def eisenstein_dumas(f: Polynomial, p: int) -> bool:
    """True iff the polygon at p is one segment from (0, m) to (n, 0) with
    gcd(m, n) = 1, which forces irreducibility over Q."""
    if not f or f[0] == 0 or f.degree < 1:
        return False
    np_ = newton_polygon(f, p)
    if len(np_.segments) != 1:
        return False
    (j0, m), (n, vn) = np_.vertices
    return j0 == 0 and vn == 0 and n == f.degree and m > 0 and gcd(m, n) == 1


@dataclass(frozen=True)
class SegmentDegreeConstraint:
    slope: Fraction
    length: int

    @property
    def denominator(self) -> int:
        return self.slope.denominator

    @property
    def allowed_degrees(self) -> Tuple[int, ...]:
        """Degrees a single irreducible local factor from this segment may have."""
        b = self.denominator
        return tuple(range(b, self.length + 1, b))


def local_degree_constraints(f: Polynomial, p: int) -> List[SegmentDegreeConstraint]:
    return [SegmentDegreeConstraint(s.slope, s.length) for s in newton_polygon(f, p).segments]


def _subset_sums(parts: Iterable[int], n: int) -> Set[int]:
    reach = {0}
    for d in parts:
        reach |= {r + d for r in reach if r + d <= n}
    return reach


def newton_degree_set(f: Polynomial, p: int) -> Set[int]:
    """Degrees a Q_p-factor of f can have according to the polygon alone."""
    n = f.degree
    k = f.order_at_zero()
    # each power of x is a linear factor on its own
    reach = _subset_sums([1] * k, n)
    for s in newton_polygon(f, p).segments:
        b = s.denominator
        reach = {r + t for r in reach for t in range(0, s.length + 1, b) if r + t <= n}
    return reach


def pattern_degree_set(pattern: Sequence[int], n: int) -> Set[int]:
    """Subset sums of an unramified factor-degree pattern."""
    return _subset_sums(pattern, n)


def possible_factor_degrees(
    f: Polynomial, primes: Iterable[int], disc: Optional[int] = None
) -> Set[int]:
    """Degrees of possible factors of f over Q that survive every prime given.

    Primes dividing disc(f) or lc(f) are used through their Newton segments,
    the others through the degree pattern of f mod p.  A result of
    {0, deg f} proves irreducibility.
    """
    if disc is None:
        disc = discriminant(f)
    if disc == 0:
        raise ValueError("not squarefree")
    n = f.degree
    survivors = set(range(n + 1))
    for p in primes:
        survivors &= local_degree_set(f, p, disc)
    return survivors


def local_degree_set(f: Polynomial, p: int, disc) -> Set[int]:
    ramified = Fraction(disc).numerator % p == 0 or f.lc % p == 0
    if ramified or not is_squarefree_mod(f, p):
        return newton_degree_set(f, p)
    return pattern_degree_set(degree_pattern_mod(f, p), f.degree)


def flatness_steepness(f: Polynomial, p: int) -> Tuple[int, Fraction]:
    np_ = newton_polygon(f, p)
    return np_.flatness, np_.steepness


class ExclusionInterval(NamedTuple):
    """Open interval (lower, upper) of local factor degrees that cannot occur."""

    lower: int
    upper: Optional[Fraction]

    def excludes(self, d: int) -> bool:
        return self.upper is not None and self.lower < d < self.upper


def degree_exclusion_interval(f: Polynomial, p: int) -> ExclusionInterval:
    """Degrees in (u, 1/mu) that no factor of f over Q_p can have.

    mu is the absolute slope of the sloped segment nearest the leading
    coefficient, and u = deg f minus that segment's length.  Any local
    factor is a product of pieces from each segment; a factor of degree
    above u must take a piece from that segment, whose degree is a multiple
    of the slope denominator, hence at least 1/mu.  This u also satisfies
    the usual hypothesis v_p(a_j) > 0 for j <= deg f - u - 1.
    """
    if not f.is_integral() or f.lc != 1:
        raise ValueError("degree_exclusion_interval needs a monic integral polynomial")
    n = f.degree
    sloped = [s for s in newton_polygon(f, p).segments if s.slope != 0]
    if not sloped:
        return ExclusionInterval(n, None)
    last = sloped[-1]
    return ExclusionInterval(n - last.length, 1 / abs(last.slope))


def positive_prefix_bound(f: Polynomial, p: int) -> int:
    """Smallest u with v_p(a_j) > 0 for all j <= deg f - u - 1."""
    j = -1
    for c in f.coeffs:
        if c and valuation(p, c) > 0 or c == 0:
            j += 1
        else:
            break
    return f.degree - 1 - j
