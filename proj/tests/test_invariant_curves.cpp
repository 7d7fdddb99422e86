#include "doctest.h"

#include <numeric>

#include "semiconj/decompose.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/invariant_curves.hpp"
#include "semiconj/poly_io.hpp"
#include "semiconj/special_forms.hpp"
#include "support.hpp"

using namespace semiconj;

namespace {

Polynomial pp(const char* s) { return parse_polynomial(s); }

void check_system(const CurveSystem& c) {
  CHECK(compose(c.t, c.u) == compose(c.u, c.f));
  CHECK(compose(c.t, c.v) == compose(c.v, c.g));
  CHECK(std::gcd(c.u.degree(), c.v.degree()) == 1);
  CHECK(verify_invariant(c.u, c.v, c.f, c.g));
}

}  // namespace

TEST_SUITE("build_curve") {
  TEST_CASE("x = y^2 for the swapped cubic pair") {
    const Polynomial f = pp("z^3+2*z^2+z"), g = pp("z^3+z");
    const CurveSystem c = build_curve({pp("z^2"), Polynomial::z(), g}, f, g);
    CHECK(c.u == Polynomial::z());
    CHECK(c.v == pp("z^2"));
    CHECK(c.t == f);
    check_system(c);
    // On x = y^2: f(x) = g(y)^2.
    for (long y = -3; y <= 3; ++y) {
      const ExactScalar ys(y);
      CHECK(f.evaluate(ys * ys) == g.evaluate(ys) * g.evaluate(ys));
    }
  }

  TEST_CASE("diagonal") {
    const Polynomial f = pp("z^3+z+1");
    const CurveSystem c = build_curve({Polynomial::z(), Polynomial::z(), f}, f, f);
    CHECK(c.u == Polynomial::z());
    CHECK(c.v == Polynomial::z());
    CHECK(c.t == f);
    check_system(c);
  }

  TEST_CASE("common right factor is removed first") {
    // pi = z^2 o z^3, rho = z o z^3 over h = z^7 + z.
    const Polynomial h = pp("z^7+z");
    const Polynomial pi = pp("z^6"), rho = pp("z^3");
    const Polynomial f = left_quotient(compose(pi, h), pi).value();
    const Polynomial g = left_quotient(compose(rho, h), rho).value();
    const CurveSystem c = build_curve({pi, rho, h}, f, g);
    CHECK(c.u == Polynomial::z());
    CHECK(c.v == pp("z^2"));
    check_system(c);
  }

  TEST_CASE("inputs are validated") {
    const Polynomial g = pp("z^3+z");
    try {
      build_curve({pp("z^2"), Polynomial::z(), g}, pp("z^3+1"), g);
      FAIL("expected InvalidParameters");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InvalidParameters);
    }
    // f = g = T_6 with pi = T_2, rho = T_3, h = T_6 is a Chebyshev system: special input.
    try {
      build_curve({chebyshev(2), chebyshev(3), chebyshev(6)}, chebyshev(6), chebyshev(6));
      FAIL("expected SpecialInput");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SpecialInput);
    }
  }
}

TEST_SUITE("verify_invariant") {
  TEST_CASE("examples") {
    const Polynomial f = pp("z*(z+1)^2"), g = pp("z^3+z");
    CHECK(verify_invariant(parse_curve("x - y^2"), f, g));
    CHECK(verify_invariant(parse_curve("x - y"), f, f));
    CHECK(verify_invariant(parse_curve("x - y^2"), pp("z^2"), pp("z^2")));
    // x^2 - y^6 is not divisible by x - y^3 after applying (z^2, z^3):
    CHECK_FALSE(verify_invariant(parse_curve("x - y^3"), pp("z^2"), pp("z^3")));
    // With f = g = z^2, x - y^3 maps to x^2 - y^6 = (x - y^3)(x + y^3), which is invariant.
    CHECK(verify_invariant(parse_curve("x - y^3"), pp("z^2"), pp("z^2")));
    CHECK_FALSE(verify_invariant(parse_curve("x - y^2"), f, f));
  }

  TEST_CASE("lines") {
    const Polynomial f = pp("z^2-z");  // fixed points 0, 2
    CHECK(verify_invariant(Polynomial::z(), Polynomial(2), f, f));
    CHECK_FALSE(verify_invariant(Polynomial::z(), Polynomial(1), f, f));
    const LineCurves lc = line_curves(f, pp("z^2+1"));
    CHECK(lc.lines.size() == 2);
    CHECK_FALSE(lc.complete);
    for (const auto& c : lc.lines) CHECK(verify_invariant(c.u, c.v, c.f, c.g));
  }
}

TEST_SUITE("medvedev_scanlon_form") {
  TEST_CASE("diagonal and graph of f") {
    const Polynomial f = pp("z^2-1");
    CurveSystem diag{Polynomial::z(), Polynomial::z(), f, f, f, false};
    CHECK(medvedev_scanlon_form(f, diag).p == Polynomial::z());
    CurveSystem graph{Polynomial::z(), f, f, f, f, false};
    const GraphForm gf = medvedev_scanlon_form(f, graph);
    CHECK(gf.p == f);
    CHECK(gf.orientation == GraphOrientation::FirstOfSecond);
  }

  TEST_CASE("graph of a root of f") {
    const Polynomial r = pp("z^3+z+1");
    const Polynomial f = iterate(r, 2);
    CurveSystem c{Polynomial::z(), r, f, f, f, false};
    const GraphForm gf = medvedev_scanlon_form(f, c);
    CHECK(gf.p == r);
    CHECK(compose(gf.p, f) == compose(f, gf.p));
  }

  TEST_CASE("special f is rejected") {
    CurveSystem c{Polynomial::z(), Polynomial::z(), pp("z^2"), pp("z^2"), pp("z^2"), false};
    CHECK_THROWS_AS(medvedev_scanlon_form(pp("z^2"), c), Error);
  }
}
