import cmath
import math
import random

import pytest
import sympy

import semiconj
from semiconj import Polynomial, SemiconjError

z = sympy.Symbol("z")


def as_sympy(p):
    return sympy.expand(sympy.sympify(str(p).replace("^", "**"), locals={"z": z, "i": sympy.I}))


def test_parse_and_print():
    p = Polynomial("(z-1)^2")
    assert str(p) == "z^2 - 2*z + 1"
    assert p.degree == 2
    assert p == "z^2 - 2*z + 1"
    assert repr(p) == "Polynomial('z^2 - 2*z + 1')"
    assert Polynomial("0.25*z") == Polynomial("z/4")


def test_compose_matches_sympy():
    rng = random.Random(5)
    for _ in range(20):
        f = " + ".join(f"{rng.randint(-5, 5)}*z^{k}" for k in range(rng.randint(1, 4) + 1))
        g = " + ".join(f"{rng.randint(-5, 5)}/{rng.randint(1, 3)}*z^{k}" for k in range(rng.randint(1, 3) + 1))
        expected = sympy.expand(as_sympy(Polynomial(f)).subs(z, as_sympy(Polynomial(g))))
        assert sympy.expand(as_sympy(semiconj.compose(f, g)) - expected) == 0


def test_chebyshev_against_cosine():
    for n in range(1, 8):
        t = semiconj.chebyshev(n)
        for theta in (0.1, 0.7, 2.3):
            assert abs(t(complex(math.cos(theta))) - math.cos(n * theta)) < 1e-9


def test_quotients():
    y = Polynomial("z^3+z+1")
    p = semiconj.compose("z^2-3", y)
    assert semiconj.left_quotient(p, y) == "z^2-3"
    assert semiconj.right_quotient(p, "z^2-3") == y
    assert semiconj.left_quotient(p + Polynomial("z"), y) is None
    left, right = semiconj.right_factor_of_degree(p, 3)
    assert left(right) == p


def test_semiconjugacy():
    a = semiconj.solve_a("z^2", "z^3+z")
    assert a == "z^3+2*z^2+z"
    assert semiconj.is_semiconjugacy(a, "z^2", "z^3+z")
    # numeric check of A(X(w)) = X(B(w))
    for w in (0.3 + 0.2j, -1.1j, 2.0):
        assert abs(a(complex(w) ** 2) - (w ** 3 + w) ** 2) < 1e-9
    witnesses = semiconj.enumerate_e("z^2-1")
    assert any(w["X"] == "z^2" and w["A"] == "(z-1)^2" for w in witnesses)
    for w in witnesses:
        assert semiconj.is_semiconjugacy(w["A"], w["X"], w["B"])


def test_classify_and_equivalence():
    assert semiconj.classify_special("z^2-2")["kind"] == "chebyshev-plus"
    assert semiconj.classify_special("z^2+1")["kind"] == "not-special"
    yes = semiconj.are_equivalent("(z-1)^2", "z^2-1")
    assert yes["verdict"] == "true"
    assert yes["conjugacy"] is not None
    assert semiconj.are_equivalent("z^2+1", "z^2-1")["verdict"] == "false"
    y = Polynomial("z^3+z+1")
    starved = semiconj.are_equivalent(semiconj.compose("z^2", y), y(Polynomial("z^2")), degree_cap=30)
    assert starved["verdict"] == "undecided"


def test_curves():
    c = semiconj.build_curve("z^2", "z", "z^3+z", "z^3+2*z^2+z", "z^3+z")
    assert c["u"] == "z" and c["v"] == "z^2"
    assert semiconj.verify_invariant("x - y^2", "z^3+2*z^2+z", "z^3+z")
    assert not semiconj.verify_invariant("x - y^3", "z^2", "z^3")


def test_julia():
    assert semiconj.escape_radius("z^2") == pytest.approx(2.0)
    good = semiconj.check_preimage_identity("(z-1)^2", "z^2", "z^2-1", samples=2000)
    wrong = semiconj.check_preimage_identity("(z+1)^2", "z^2", "z^2-1", samples=2000)
    assert good["agreement"] >= 0.99
    assert wrong["agreement"] < good["agreement"] - 0.05
    pgm = semiconj.render_pgm("z^2", width=16, height=8)
    header = b"P5\n16 8\n255\n"
    assert pgm.startswith(header) and len(pgm) == len(header) + 16 * 8
    assert cmath.isclose(Polynomial("z^2+1")(1j), 0)


def test_typed_errors():
    with pytest.raises(SemiconjError) as info:
        Polynomial("z^")
    assert info.value.kind == "ParseError"
    with pytest.raises(SemiconjError) as info:
        semiconj.iterate("z^2", 20, degree_cap=100)
    assert info.value.kind == "BudgetExceeded"
