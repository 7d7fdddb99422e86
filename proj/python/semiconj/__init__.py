"""Exact semiconjugacy and decomposition tools for complex polynomials.

Polynomials can be passed as ``Polynomial`` objects or as strings such as
``"z^3 + 2*z^2 + z"``; coefficients live in Q(i).
"""

from ._core import (
    DEFAULT_DEGREE_CAP,
    Polynomial,
    SemiconjError,
    are_equivalent,
    build_curve,
    check_preimage_identity,
    chebyshev,
    classify_special,
    compose,
    conjugate_over_c,
    enumerate_e,
    escape_radius,
    is_semiconjugacy,
    iterate,
    left_quotient,
    render_pgm,
    right_factor_of_degree,
    right_quotient,
    solve_a,
    solve_b,
    universal_pair,
    verify_invariant,
)

__all__ = [
    "DEFAULT_DEGREE_CAP",
    "Polynomial",
    "SemiconjError",
    "are_equivalent",
    "build_curve",
    "check_preimage_identity",
    "chebyshev",
    "classify_special",
    "compose",
    "conjugate_over_c",
    "enumerate_e",
    "escape_radius",
    "is_semiconjugacy",
    "iterate",
    "left_quotient",
    "render_pgm",
    "right_factor_of_degree",
    "right_quotient",
    "solve_a",
    "solve_b",
    "universal_pair",
    "verify_invariant",
]
