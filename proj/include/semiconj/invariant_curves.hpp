#pragma once

#include <optional>
#include <vector>

#include "semiconj/bivariate.hpp"
#include "semiconj/polynomial.hpp"

namespace semiconj {

/// The curve u(x) - v(y) = 0 together with t satisfying t o u = u o f and
/// t o v = v o g.
struct CurveSystem {
  Polynomial u, v, t, f, g;
  bool line = false;  ///< one of u, v is constant: a line x = xi or y = xi
};

/// f o pi = pi o h and g o rho = rho o h.
struct ParametrizedPair {
  Polynomial pi, rho, h;
};

/// Builds the (f, g)-invariant curve parametrized by (pi, rho). A common
/// right factor of pi and rho is removed first.
CurveSystem build_curve(const ParametrizedPair& pair, const Polynomial& f, const Polynomial& g);

/// Whether u(f(x)) - v(g(y)) is divisible by u(x) - v(y).
bool verify_invariant(const BivariatePoly& curve, const Polynomial& f, const Polynomial& g);
bool verify_invariant(const Polynomial& u, const Polynomial& v, const Polynomial& f, const Polynomial& g);

enum class GraphOrientation { FirstOfSecond, SecondOfFirst };  ///< z1 = p(z2) or z2 = p(z1)

struct GraphForm {
  Polynomial p;
  GraphOrientation orientation;
};

/// For f = g, rewrites a curve with deg u = 1 or deg v = 1 as the graph of a
/// polynomial p commuting with f.
GraphForm medvedev_scanlon_form(const Polynomial& f, const CurveSystem& curve);

struct LineCurves {
  std::vector<CurveSystem> lines;
  bool complete = false;  ///< all fixed points of f and g lie in Q(i)
};

/// Lines x = xi (f(xi) = xi) and y = eta (g(eta) = eta) over Q(i).
LineCurves line_curves(const Polynomial& f, const Polynomial& g);

}  // namespace semiconj
