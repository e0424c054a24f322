"""Exact arithmetic of Padé approximants to the truncated exponential:
construction, Newton polygons, irreducibility and Galois certificates."""

from .families import (
    Family,
    FamilySpec,
    closed_form_disc,
    exp_poly,
    glp,
    pade_pair,
    schur_congruence_check,
    shifted_glp,
    verify_pade_identity,
)
from .galois import (
    GaloisCertificate,
    an_containment,
    certify_galois,
    certify_irreducible,
    classify_diagonal,
    disc_square_class,
    near_eisenstein_analysis,
    verify_eisenstein_theorem,
    verify_prime_gap,
)
from .newton import (
    degree_exclusion_interval,
    eisenstein_dumas,
    flatness_steepness,
    local_degree_constraints,
    newton_index,
    newton_polygon,
    possible_factor_degrees,
)
from .numeric import (
    SquareClass,
    base_digits,
    factorial_valuation,
    is_prime,
    primes_in_interval,
    squarefree_part,
    valuation,
)
from .poly import (
    ModPolynomial,
    Polynomial,
    discriminant,
    evaluate,
    factor_mod,
    reduce_mod,
    roots_mod,
    substitute_neg,
    truncated_mul,
)

__version__ = "0.1.0"

__all__ = [
    "an_containment",
    "base_digits",
    "certify_galois",
    "certify_irreducible",
    "classify_diagonal",
    "closed_form_disc",
    "degree_exclusion_interval",
    "disc_square_class",
    "discriminant",
    "eisenstein_dumas",
    "evaluate",
    "exp_poly",
    "factor_mod",
    "factorial_valuation",
    "Family",
    "FamilySpec",
    "flatness_steepness",
    "GaloisCertificate",
    "glp",
    "is_prime",
    "local_degree_constraints",
    "ModPolynomial",
    "near_eisenstein_analysis",
    "newton_index",
    "newton_polygon",
    "pade_pair",
    "Polynomial",
    "possible_factor_degrees",
    "primes_in_interval",
    "reduce_mod",
    "roots_mod",
    "schur_congruence_check",
    "shifted_glp",
    "SquareClass",
    "squarefree_part",
    "substitute_neg",
    "truncated_mul",
    "valuation",
    "verify_eisenstein_theorem",
    "verify_pade_identity",
    "verify_prime_gap",
]
