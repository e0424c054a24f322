from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from padearith.families import pade_pair
from padearith.newton import (
    ExclusionInterval,
    degree_exclusion_interval,
    eisenstein_dumas,
    flatness_steepness,
    local_degree_constraints,
    newton_degree_set,
    newton_index,
    newton_polygon,
    possible_factor_degrees,
    relevant_primes,
)
from padearith.numeric import valuation
from padearith.poly import Polynomial


def test_polygon_of_p_3_4_at_3():
    np_ = newton_polygon(pade_pair(3, 4)[0], 3)
    assert np_.vertices == ((0, 1), (3, 0))
    assert [(s.slope, s.length) for s in np_.segments] == [(Fraction(-1, 3), 3)]
    assert np_.to_dict() == {
        "prime": 3,
        "vertices": [[0, 1], [3, 0]],
        "segments": [{"slope": "-1/3", "length": 3}],
        "flatness": 0,
        "steepness": "1/3",
    }


def test_polygon_with_flat_part_and_gaps():
    # x^4 + 0 x^3 + 4x^2 + 2x + 8 at 2: points (0,3) (1,1) (2,2) (4,0)
    np_ = newton_polygon(Polynomial([8, 2, 4, 0, 1]), 2)
    assert np_.vertices == ((0, 3), (1, 1), (4, 0))
    assert flatness_steepness(Polynomial([3, 1, 1]), 3) == (1, Fraction(1))
    # (1, 1) lies above the chord from (0, 1) to (2, 0)
    assert flatness_steepness(Polynomial([3, 3, 1]), 3) == (0, Fraction(1, 2))
    assert newton_polygon(Polynomial([1, 1, 1]), 5).is_trivial


@given(st.lists(st.integers(-200, 200), min_size=2, max_size=10).filter(lambda c: c[0] and c[-1]),
       st.sampled_from([2, 3, 5]))
def test_hull_is_lower_and_convex(coeffs, p):
    f = Polynomial(coeffs)
    np_ = newton_polygon(f, p)
    pts = [(j, valuation(p, c)) for j, c in enumerate(coeffs) if c]
    assert set(np_.vertices) <= set(pts)
    assert np_.vertices[0][0] == 0 and np_.vertices[-1][0] == f.degree
    slopes = [s.slope for s in np_.segments]
    assert slopes == sorted(slopes) and len(set(slopes)) == len(slopes)
    for (a, va), (b, vb) in zip(np_.vertices, np_.vertices[1:]):
        for j, v in pts:
            if a <= j <= b:
                assert v * (b - a) >= va * (b - j) + vb * (j - a)
    assert sum(s.length for s in np_.segments) == f.degree


def test_eisenstein_dumas():
    assert eisenstein_dumas(Polynomial([2, 0, 1]), 2)
    assert eisenstein_dumas(Polynomial([8, 0, 1]), 2)  # slope -3/2
    assert eisenstein_dumas(Polynomial([4, 0, 0, 1]), 2)  # slope -2/3
    assert not eisenstein_dumas(Polynomial([4, 0, 1]), 2)  # gcd(2, 2) = 2
    assert not eisenstein_dumas(Polynomial([0, 2, 1]), 2)


def test_newton_index():
    assert newton_index(pade_pair(8, 9)[0]) == 105
    assert newton_index(pade_pair(8, 9)[1]) == 315
    assert newton_index(Polynomial([1, 1])) == 1
    with pytest.raises(ValueError):
        newton_index(Polynomial([0, 1, 1]))


def test_relevant_primes_ignore_content():
    assert relevant_primes(Polynomial([6, 0, 3])) == [2]


def test_segment_constraints():
    cons = local_degree_constraints(Polynomial([4, 0, 0, 1]), 2)
    assert [c.allowed_degrees for c in cons] == [(3,)]
    assert newton_degree_set(Polynomial([4, 0, 0, 1]), 2) == {0, 3}
    assert newton_degree_set(Polynomial([0, 2, 0, 1]), 2) == {0, 1, 2, 3}


def test_sieve_never_proves_a_product_irreducible():
    products = [
        Polynomial([1, 0, 1]) * Polynomial([2, 0, 1]),
        Polynomial([-1, 0, 1]),
        Polynomial([1, 1, 1]) * Polynomial([1, 1, 0, 1]),
        pade_pair(2, 3)[0] * pade_pair(3, 4)[0],
    ]
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]
    for f in products:
        surv = possible_factor_degrees(f, primes)
        assert surv - {0, f.degree}


def test_sieve_proves_irreducible():
    f = Polynomial([-2, 0, 0, 1])
    assert possible_factor_degrees(f, [5, 7]) == {0, 3}
    with pytest.raises(ValueError):
        possible_factor_degrees(Polynomial([1, 2, 1]), [3])


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_near_eisenstein_constraints(p):
    f = pade_pair(p + 1, p + 2)[0]
    assert possible_factor_degrees(f, [p]) == {0, 1, p, p + 1}
    ex = degree_exclusion_interval(f, p)
    assert ex == ExclusionInterval(1, Fraction(p))
    assert not any(ex.excludes(d) for d in (1, p)) and all(ex.excludes(d) for d in range(2, p))


def test_exclusion_interval_needs_monic():
    with pytest.raises(ValueError):
        degree_exclusion_interval(Polynomial([2, 0, 3]), 2)
    assert degree_exclusion_interval(Polynomial([1, 1, 1]), 2).upper is None
