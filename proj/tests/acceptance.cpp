// Acceptance run: one PASS/FAIL line per criterion. Exit status is nonzero
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "semiconj/decompose.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/invariant_curves.hpp"
#include "semiconj/julia_numeric.hpp"
#include "semiconj/poly_io.hpp"
#include "semiconj/semiconj_engine.hpp"
#include "semiconj/special_forms.hpp"
#include "support.hpp"

using namespace semiconj;
using testing_support::Gen;

namespace {

// Pinned tolerances.
constexpr double kChebSeconds = 1.0;
constexpr double kRittSeconds = 1.0;
constexpr double kJuliaSeconds = 5.0;
constexpr double kJuliaAgreement = 0.99;
constexpr double kJuliaWrongGap = 0.05;
constexpr int kJuliaSamples = 10000;
constexpr int kJuliaCap = 200;
constexpr double kEnumerateSeconds = 60.0;
constexpr double kSpecialSeconds = 2.0;
constexpr double kCurveSeconds = 1.0;
constexpr int kOracleInstances = 100;
constexpr double kUniversalBound = 32.0;

Polynomial pp(const char* s) { return parse_polynomial(s); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double seconds_limit, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (seconds_limit > 0 && secs >= seconds_limit) {
    out.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(seconds_limit) + " s");
  }
  if (!out.ok) ++failures;
  std::printf("%s %2d  %s  (%.3f s)%s%s\n", out.ok ? "PASS" : "FAIL", id, title, secs, out.ok ? "" : "  -- ",
              out.detail.c_str());
}

}  // namespace

int main() {
  criterion(1, "Chebyshev semigroup T_m o T_n = T_mn, 2 <= m, n <= 10", kChebSeconds, [](Outcome& o) {
    for (int m = 2; m <= 10; ++m) {
      for (int n = 2; n <= 10; ++n) {
        o.require(compose(chebyshev(m), chebyshev(n)) == chebyshev(m * n),
                  "T_" + std::to_string(m) + " o T_" + std::to_string(n));
      }
    }
  });

  criterion(2, "Ritt swap identity and solve_A(z^2, z^3+z)", kRittSeconds, [](Outcome& o) {
    RittMoveForm f;
    f.family = RittFamily::Power;
    f.s = 1;
    f.n = 2;
    f.R = pp("z+1");
    const RittMove m = ritt_move(f);
    const Polynomial expected = pp("z^6+2*z^4+z^2");
    o.require(compose(m.first.left, m.first.right) == expected, "A o C");
    o.require(compose(m.second.left, m.second.right) == expected, "D o B");
    o.require(m.composite == expected, "composite");
    auto w = solve_A(pp("z^2"), pp("z^3+z"));
    o.require(w.has_value() && w->A == pp("z^3+2*z^2+z"), "solve_A");
  });

  criterion(3, "Preimage identity K(B) = X^-1(K(A)) sampled", kJuliaSeconds, [](Outcome& o) {
    const PreimageReport good =
        check_preimage_identity(pp("(z-1)^2"), pp("z^2"), pp("z^2-1"), kJuliaSamples, 0, kDefaultMargin, kJuliaCap);
    const PreimageReport wrong =
        check_preimage_identity(pp("(z+1)^2"), pp("z^2"), pp("z^2-1"), kJuliaSamples, 0, kDefaultMargin, kJuliaCap);
    std::printf("      agreement: correct %.4f, wrong %.4f\n", good.agreement, wrong.agreement);
    o.require(good.agreement >= kJuliaAgreement, "correct triple agreement " + std::to_string(good.agreement));
    o.require(wrong.agreement <= good.agreement - kJuliaWrongGap, "wrong triple agreement " + std::to_string(wrong.agreement));
  });

  criterion(4, "enumerate_E(z^2-1) sound, contains (z^2, (z-1)^2), no special A", kEnumerateSeconds, [](Outcome& o) {
    const Polynomial b = pp("z^2-1");
    const auto ws = enumerate_E(b, SearchBudget::for_degree(2));
    bool found = false;
    for (const auto& w : ws) {
      o.require(is_semiconjugacy(w.A, w.X, w.B), "unsound witness X = " + w.X.to_string());
      o.require(!classify_special(w.A).is_special(), "special A = " + w.A.to_string());
      found = found || (w.X == pp("z^2") && w.A == pp("(z-1)^2"));
    }
    o.require(found, "X = z^2 missing");
  });

  criterion(5, "strip_iterate bound on splits of B^s, s <= 3", 0, [](Outcome& o) {
    int splits = 0;
    for (const char* s : {"z^2+1", "z^3+z+1"}) {
      const Polynomial b = pp(s);
      o.require(!classify_special(b).is_special(), std::string(s) + " is special");
      const SearchBudget bud = SearchBudget::for_degree(b.degree());
      for (int k = 1; k <= 3; ++k) {
        const Polynomial bk = iterate(b, static_cast<unsigned>(k));
        for (int d = 1; d <= bk.degree(); ++d) {
          if (bk.degree() % d != 0) continue;
          auto split = right_factor_of_degree(bk, d);
          if (!split) continue;
          ++splits;
          try {
            const StripResult r = strip_iterate(split->left, split->right, b, k, bud);
            o.require(r.s <= iterate_depth_bound(b.degree()), "bound exceeded");
            o.require(compose(r.Y, r.X) == iterate(b, static_cast<unsigned>(r.s)), "stripped split does not recompose");
          } catch (const Error& e) {
            o.require(e.kind() != ErrorKind::BoundViolation, "BoundViolation");
            throw;
          }
        }
      }
    }
    std::printf("      %d splits checked\n", splits);
  });

  criterion(6, "classify_special: z^2-2, z^2+1, 20 conjugates of z^3", kSpecialSeconds, [](Outcome& o) {
    const SpecialClassification c = classify_special(pp("z^2-2"));
    o.require(c.kind == SpecialKind::ChebyshevPlus, "z^2-2 kind");
    o.require(c.K && c.K->first == ExactScalar(-2) && c.K->second == ExactScalar(2), "K = {-2, 2}");
    o.require(classify_special(pp("z^2+1")).kind == SpecialKind::NotSpecial, "z^2+1");
    Gen g(6);
    for (int t = 0; t < 20; ++t) {
      const AffineMap l = g.affine(5, 4, false);
      o.require(classify_special(affine_conjugate(pp("z^3"), l)).kind == SpecialKind::Power,
                "conjugate by " + l.as_polynomial().to_string());
    }
  });

  criterion(7, "build_curve(f = z(z+1)^2, g = z^3+z, pi = z^2, rho = z, h = g)", kCurveSeconds, [](Outcome& o) {
    const Polynomial f = pp("z^3+2*z^2+z"), g = pp("z^3+z");
    const CurveSystem c = build_curve({pp("z^2"), Polynomial::z(), g}, f, g);
    o.require(c.u == Polynomial::z() && c.v == pp("z^2") && c.t == f, "system (u, v, t)");
    o.require(verify_invariant(parse_curve("x - y^2"), f, g), "verify_invariant");
  });

  criterion(8, "left/right quotients match linear-system oracles", 0, [](Outcome& o) {
    Gen g(8);
    int found_l = 0, found_r = 0;
    for (int t = 0; t < kOracleInstances; ++t) {
      const Polynomial outer = g.poly(static_cast<int>(g.integer(1, 4)));
      const Polynomial inner = g.poly(static_cast<int>(g.integer(1, 4)));
      Polynomial p = compose(outer, inner);
      if (t % 2 == 1 && p.degree() > 1) p += Polynomial::monomial(g.nonzero(), static_cast<std::size_t>(g.integer(1, p.degree() - 1)));
      const auto lq = left_quotient(p, inner);
      const auto lo = testing_support::left_quotient_oracle(p, inner);
      o.require(lq.has_value() == lo.has_value(), "left existence, instance " + std::to_string(t));
      if (lq && lo) o.require(*lq == *lo, "left value, instance " + std::to_string(t));
      found_l += lq ? 1 : 0;
      const RightQuotient rq = try_right_quotient(p, outer);
      const auto ro = testing_support::right_quotients_oracle(p, outer);
      o.require((rq.status == QuotientStatus::Found) == !ro.empty(), "right existence, instance " + std::to_string(t));
      if (rq.status == QuotientStatus::Found && !ro.empty()) {
        o.require(rq.value == ro.front(), "right value, instance " + std::to_string(t));
      }
      found_r += rq.status == QuotientStatus::Found ? 1 : 0;
    }
    std::printf("      %d instances: %d left and %d right quotients exist\n", kOracleInstances, found_l, found_r);
  });

  criterion(9, "universal_pair(z^2-1): deg X <= 32, registry diagrams commute", 0, [](Outcome& o) {
    const Polynomial b = pp("z^2-1");
    const UniversalPair u = universal_pair(b, SearchBudget::for_degree(2));
    o.require(static_cast<double>(u.bound) == kUniversalBound, "bound " + std::to_string(static_cast<double>(u.bound)));
    o.require(u.X.degree() <= kUniversalBound, "deg X = " + std::to_string(u.X.degree()));
    o.require(is_semiconjugacy(u.A, u.X, b), "A o X = X o B");
    o.require(!u.registry.empty(), "empty registry");
    for (const auto& e : u.registry) {
      o.require(compose(e.C, e.X_C) == compose(e.X_C, b), "C o X_C = X_C o B for C = " + e.C.to_string());
      o.require(compose(u.A, e.U_C) == compose(e.U_C, e.C), "A o U_C = U_C o C for C = " + e.C.to_string());
    }
  });

  criterion(10, "are_equivalent: conjugate pair, distinct pair, undecided under exhaustion", 0, [](Outcome& o) {
    const Polynomial b = pp("z^2-1");
    const Equivalence yes = are_equivalent(pp("(z-1)^2"), b, SearchBudget::for_degree(2));
    o.require(yes.verdict == Verdict::True && yes.conjugacy.has_value(), "(z-1)^2 ~ z^2-1");
    if (yes.conjugacy) o.require(affine_conjugate(b, *yes.conjugacy) == pp("(z-1)^2"), "conjugacy witness");
    const Equivalence no = are_equivalent(pp("z^2+1"), b, SearchBudget::for_degree(2));
    o.require(no.verdict == Verdict::False, "z^2+1 vs z^2-1");
    const Polynomial y = pp("z^3+z+1");
    const Equivalence starved =
        are_equivalent(compose(pp("z^2"), y), compose(y, pp("z^2")), SearchBudget::for_degree(6, 30));
    o.require(starved.verdict == Verdict::Undecided, "exhausted budget must give undecided");
  });

  std::printf("%s: %d of 10 criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
