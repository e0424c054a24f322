from fractions import Fraction
from math import factorial

import pytest

from padearith.families import (
    Family,
    FamilySpec,
    closed_form_disc,
    diagonal,
    exp_poly,
    glp,
    pade_pair,
    printed_sign_disc,
    schur_congruence_check,
    shifted_glp,
    spec_discriminant,
    verify_pade_identity,
)
from padearith.poly import Polynomial, discriminant, substitute_neg, truncated_mul


def solve(rows, rhs):
    """Gauss-Jordan over Q."""
    n = len(rows)
    a = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(rows, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c])
        a[c], a[piv] = a[piv], a[c]
        a[c] = [x / a[c][c] for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                a[i] = [x - a[i][c] * y for x, y in zip(a[i], a[c])]
    return [a[i][n] for i in range(n)]


def pade_by_linear_algebra(u, v):
    """[u/v] approximant of exp from the linear system, with Q(0) = 1."""
    t = [Fraction(1, factorial(j)) for j in range(u + v + 1)]
    coef = lambda j: t[j] if 0 <= j else Fraction(0)
    # sum_{i=0}^{v} q_i t_{k-i} = 0 for k = u+1 .. u+v, q_0 = 1
    rows = [[coef(k - i) for i in range(1, v + 1)] for k in range(u + 1, u + v + 1)]
    rhs = [-coef(k) for k in range(u + 1, u + v + 1)]
    q = [Fraction(1)] + (solve(rows, rhs) if v else [])
    p = [sum(q[i] * coef(k - i) for i in range(min(k, v) + 1)) for k in range(u + 1)]
    return Polynomial(p), Polynomial(q)


def proportional(f, g):
    if f.degree != g.degree:
        return False
    c = Fraction(f.lc) / Fraction(g.lc)
    return f == g * c


@pytest.mark.parametrize(
    "u, v, coeffs",
    [
        (4, 5, [3024, 1344, 252, 24, 1]),
        (1, 2, [3, 1]),
        (2, 3, [20, 8, 1]),
        (3, 4, [210, 90, 15, 1]),
    ],
)
def test_numerator_values(u, v, coeffs):
    assert pade_pair(u, v)[0].coeffs == tuple(coeffs)


def test_denominator_value():
    assert pade_pair(1, 2)[1].coeffs == (6, -4, 1)


def test_exp_poly():
    assert exp_poly(2).coeffs == (2, 2, 1)
    assert exp_poly(4).coeffs == (24, 24, 12, 4, 1)
    assert exp_poly(0).coeffs == (1,)


@pytest.mark.parametrize("u", range(0, 7))
@pytest.mark.parametrize("v", range(0, 7))
def test_pade_pair_matches_linear_algebra(u, v):
    if u + v == 0:
        return
    P, Q = pade_pair(u, v)
    P0, Q0 = pade_by_linear_algebra(u, v)
    assert proportional(P, P0)
    assert proportional(Q, Q0)


def test_symmetry_p_q():
    for u in range(0, 31):
        for v in range(0, 31):
            if u + v:
                assert pade_pair(u, v)[0] == substitute_neg(pade_pair(v, u)[1])


@pytest.mark.parametrize("u, v, n", [(1, 0, 1), (2, 3, 5), (4, 5, 9), (3, 3, 12), (0, 4, 4), (7, 2, 16)])
def test_pade_identity(u, v, n):
    r = verify_pade_identity(u, v, n)
    assert r.ok
    assert r.scalar == Fraction(factorial(n) * factorial(v), factorial(u))


def test_pade_identity_is_not_vacuous():
    P, Q = pade_pair(3, 4)
    e = exp_poly(7)
    k = 3 + 4 + 1
    c = Fraction(factorial(7) * factorial(4), factorial(3))
    assert truncated_mul(e, Q, k) == P.truncate(k) * c
    assert truncated_mul(e, Q, k + 1) != (P * c).truncate(k + 1)


def test_pade_identity_rejects_bad_ranges():
    with pytest.raises(ValueError):
        verify_pade_identity(3, 3, 5)


@pytest.mark.parametrize("n", range(1, 9))
@pytest.mark.parametrize("r", [0, 1, 3, 7])
def test_shifted_glp_is_scaled_laguerre(n, r):
    assert shifted_glp(n, r) == glp(n, -1 - n - r) * factorial(n)


def test_glp_small_case():
    # L_2^(0)(x) = 1 - 2x + x^2/2
    assert glp(2, 0) == Polynomial([1, -2, Fraction(1, 2)])


def test_families_as_shifted_laguerre():
    assert pade_pair(4, 5)[0] == shifted_glp(4, 5)
    assert exp_poly(6) == shifted_glp(6, 0)
    assert pade_pair(3, 5)[1] == substitute_neg(shifted_glp(5, 3))


@pytest.mark.parametrize("n", range(1, 11))
@pytest.mark.parametrize("r", range(0, 11))
def test_closed_form_discriminant(n, r):
    assert closed_form_disc(n, r) == discriminant(shifted_glp(n, r))


def test_printed_sign_is_wrong_at_2_3():
    assert discriminant(pade_pair(2, 3)[0]) == -16
    assert closed_form_disc(2, 3) == -16
    assert printed_sign_disc(2, 3) == 16


def test_spec_discriminant_for_each_family():
    for spec in (FamilySpec.P(3, 4), FamilySpec.Q(3, 4), FamilySpec.exp(7), FamilySpec.shifted(5, 2)):
        assert spec_discriminant(spec) == discriminant(spec.build())
    assert spec_discriminant(FamilySpec.P(3, 4)) == -16200
    assert spec_discriminant(FamilySpec(Family.GLP, n=3, alpha=Fraction(1, 2))) is None


def test_family_spec_validation():
    with pytest.raises(ValueError):
        FamilySpec.P(0, 0)
    with pytest.raises(ValueError):
        FamilySpec.exp(0)
    assert FamilySpec.Q(3, 4).degree == 4
    assert FamilySpec.P(3, 4).label() == "P(3,4)"


def test_schur_q_3_4_needs_minus_one():
    r = schur_congruence_check("Q", 3, 3)
    assert r.ok and r.scalar == -1 and (r.k, r.u) == (1, 0)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("family", ["P", "Q"])
@pytest.mark.parametrize("delta", [0, 1])
def test_schur_congruences(p, family, delta):
    for m in range(1, 41):
        r = schur_congruence_check(family, m, p, delta)
        assert r.ok, (family, m, p, delta)
        assert r.scalar is not None and r.scalar % p != 0


def test_schur_decomposes_m():
    r = schur_congruence_check("P", 5, 3, 1)
    assert r.ok and r.k == 1 and r.u == 2


def test_scalar_multiple_rejects_non_multiples():
    from padearith.families import _scalar_multiple
    from padearith.poly import reduce_mod

    big = reduce_mod(diagonal("P", 4, 1), 3)
    assert _scalar_multiple(big, reduce_mod(Polynomial([1, 1, 0, 0, 1]), 3)) is None
