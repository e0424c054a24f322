import pytest

from padearith.families import FamilySpec, pade_pair
from padearith.galois import (
    AnKind,
    IrreducibilityKind,
    certify_galois,
    certify_irreducible,
    certify_polynomial,
    classify_diagonal,
    disc_square_class,
    group_order,
    integer_roots_by_divisors,
    jordan_primes,
    literature_citation,
    near_eisenstein_analysis,
    near_eisenstein_oracle,
    verify_eisenstein_theorem,
    verify_prime_gap,
)
from padearith.newton import newton_index
from padearith.poly import Polynomial


def test_certificate_p_8_9():
    cert = certify_galois(FamilySpec.P(8, 9))
    assert cert.conclusion == "A_8" and cert.definite
    assert cert.an_containment.kind is AnKind.NEWTON_INDEX_PRIME and cert.an_containment.q == 5
    assert cert.newton_index == 105
    d = cert.to_dict()
    assert d["family"] == "P" and d["u"] == 8 and d["square_class"] == 1


def test_certificate_q_8_9():
    cert = certify_galois(FamilySpec.Q(8, 9))
    assert cert.conclusion == "A_9"
    assert cert.irreducibility.kind is IrreducibilityKind.EISENSTEIN_DUMAS


@pytest.mark.parametrize(
    "coeffs, conclusion",
    [
        ([-2, 0, 0, 1], "S_3"),
        ([-1, -3, 0, 1], "A_3"),  # disc 81
        ([1, 1, 0, 0, 0, 1], None),  # x^5 + x + 1 = (x^2+x+1)(x^3-x^2+1)
        ([-1, 0, 1], None),
        ([3, 1], "A_1"),  # disc of a linear polynomial is 1
    ],
)
def test_certify_small_polynomials(coeffs, conclusion):
    cert = certify_polynomial(Polynomial(coeffs))
    if conclusion is None:
        assert cert.conclusion == "UNRESOLVED"
        assert cert.irreducibility.kind is IrreducibilityKind.NONE
    else:
        assert cert.conclusion == conclusion


def test_no_false_certificates_on_products():
    factors = [pade_pair(u, u + 1)[0] for u in range(1, 6)] + [Polynomial([1, 1, 1]), Polynomial([-2, 0, 0, 1])]
    for i, f in enumerate(factors):
        for g in factors[i + 1:]:
            ev = certify_irreducible(f * g)
            assert ev.kind is IrreducibilityKind.NONE


def test_x_squared_minus_one():
    ev = certify_irreducible(Polynomial([-1, 0, 1]))
    assert ev.kind is IrreducibilityKind.NONE
    assert set(ev.survivors) == {0, 1, 2}


def test_literature_registry():
    assert "Filaseta" in literature_citation(FamilySpec.P(5, 5))
    assert "Hajir" in literature_citation(FamilySpec.shifted(9, 3))
    assert literature_citation(FamilySpec.shifted(9, 20)) is None
    assert literature_citation(None) is None


def test_jordan_primes():
    assert jordan_primes(8) == [5]
    assert jordan_primes(20) == [11, 13, 17]
    assert jordan_primes(6) == []


@pytest.mark.parametrize("family", ["P", "Q"])
def test_table_delta_one(family):
    for m in range(2, 21):
        cert = certify_galois(FamilySpec(family, u=m, v=m + 1))
        assert cert.definite
        assert cert.conclusion == classify_diagonal(m, 1, family)


def test_table_named_rows():
    want = {4: ("A_4", "S_5"), 8: ("A_8", "A_9"), 12: ("A_12", "S_13"),
            16: ("A_16", "S_17"), 17: ("A_17", "S_18"), 19: ("S_19", "S_20"), 20: ("A_20", "S_21")}
    for m, (gp, gq) in want.items():
        assert (classify_diagonal(m, 1, "P"), classify_diagonal(m, 1, "Q")) == (gp, gq)


def test_table_delta_zero():
    for m in range(2, 13):
        for family in ("P", "Q"):
            cert = certify_galois(FamilySpec(family, u=m, v=m))
            assert cert.group == f"S_{m}"


def test_square_class_of_p_3_4():
    assert disc_square_class(pade_pair(3, 4)[0]).representative == -2


def test_group_order_and_newton_index_divides():
    assert group_order("A_5") == 60 and group_order("S_4") == 24 and group_order("A_1") == 1
    for n in range(3, 16):
        cert = certify_galois(FamilySpec.exp(n))
        assert cert.conclusion == ("A_" if n % 4 == 0 else "S_") + str(n)
        assert group_order(cert.conclusion) % newton_index(cert.spec.build()) == 0


@pytest.mark.parametrize("p, n", [(3, 1), (3, 2), (5, 1), (7, 1)])
@pytest.mark.parametrize("side", ["P", "Q"])
def test_eisenstein_verifier(p, n, side):
    rep = verify_eisenstein_theorem(p, n, side)
    assert rep.ok, rep.failures()
    assert [c.name for c in rep.checks] == [
        "constant-term valuation", "coefficient valuations", "single segment", "eisenstein-dumas"
    ]


def test_eisenstein_verifier_arguments():
    with pytest.raises(ValueError):
        verify_eisenstein_theorem(2, 2, "P")
    with pytest.raises(ValueError):
        verify_eisenstein_theorem(7, 3, "P", budget=100)


def test_prime_gap():
    assert verify_prime_gap(21, 100000).ok
    small = verify_prime_gap(2, 20)
    assert 20 in small.failures
    assert small.failures == (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 20)


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
@pytest.mark.parametrize("family", ["P", "Q"])
def test_near_eisenstein(p, family):
    res = near_eisenstein_analysis(p, family)
    assert set(res.constraints) == {0, 1, p, p + 1}
    assert res.conclusion == near_eisenstein_oracle(p, family) == "irreducible"
    if family == "Q":
        assert res.simple_root_residues == (1,)
    elif p > 3:
        assert res.simple_root_residues == ((-3) % p,)


def test_integer_roots_by_divisors():
    f = Polynomial([6, -5, 1]) * Polynomial([1, 0, 1])
    assert integer_roots_by_divisors(f) == [2, 3]
    assert integer_roots_by_divisors(f, signs=(-1,)) == []
