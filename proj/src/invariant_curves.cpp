#include "semiconj/invariant_curves.hpp"

#include <numeric>

#include "semiconj/decompose.hpp"
#include "semiconj/errors.hpp"
#include "semiconj/semiconj_engine.hpp"
#include "semiconj/special_forms.hpp"

namespace semiconj {

namespace {

// Removes the largest common right factor w of pi and rho and replaces h by
// the h~ with h~ o w = w o h.
ParametrizedPair strip_common_factor(const ParametrizedPair& pair) {
  const int g = std::gcd(pair.pi.degree(), pair.rho.degree());
  for (int k = g; k > 1; --k) {
    if (g % k != 0) continue;
    auto split = right_factor_of_degree(pair.pi, k);
    if (!split) continue;
    auto rho_left = left_quotient(pair.rho, split->right);
    if (!rho_left) continue;
    auto h_new = solve_A(split->right, pair.h);
    if (!h_new) continue;
    return {split->left, *rho_left, h_new->A};
  }
  return pair;
}

}  // namespace

CurveSystem build_curve(const ParametrizedPair& pair, const Polynomial& f, const Polynomial& g) {
  if (pair.pi.degree() < 1 || pair.rho.degree() < 1) {
    raise(ErrorKind::InvalidParameters, "build_curve: pi and rho must be nonconstant");
  }
  if (f.degree() < 2 || g.degree() < 2) raise(ErrorKind::InvalidParameters, "build_curve: f, g need degree >= 2");
  if (compose(f, pair.pi) != compose(pair.pi, pair.h)) {
    raise(ErrorKind::InvalidParameters, "build_curve: f o pi differs from pi o h");
  }
  if (compose(g, pair.rho) != compose(pair.rho, pair.h)) {
    raise(ErrorKind::InvalidParameters, "build_curve: g o rho differs from rho o h");
  }
  if (classify_special(f).is_special()) raise(ErrorKind::SpecialInput, "build_curve: f is special");
  if (classify_special(g).is_special()) raise(ErrorKind::SpecialInput, "build_curve: g is special");

  const ParametrizedPair reduced = strip_common_factor(pair);
  auto uv = join_pair(reduced.pi, reduced.rho);
  if (!uv) raise(ErrorKind::ConsistencyFailure, "build_curve: pi and rho have no common left composite");
  CurveSystem out;
  out.u = uv->first;
  out.v = uv->second;
  out.f = f;
  out.g = g;
  const Polynomial top = compose(out.u, reduced.pi);
  auto t = left_quotient(compose(top, reduced.h), top);
  if (!t) raise(ErrorKind::ConsistencyFailure, "build_curve: u o pi is not in E(h)");
  out.t = *t;
  if (compose(out.t, out.u) != compose(out.u, f) || compose(out.t, out.v) != compose(out.v, g)) {
    raise(ErrorKind::ConsistencyFailure, "build_curve: t fails the curve identities");
  }
  if (std::gcd(out.u.degree(), out.v.degree()) != 1) {
    raise(ErrorKind::ConsistencyFailure, "build_curve: deg u and deg v are not coprime");
  }
  return out;
}

bool verify_invariant(const Polynomial& u, const Polynomial& v, const Polynomial& f, const Polynomial& g) {
  const BivariatePoly curve = BivariatePoly::separated(u, v);
  const BivariatePoly image = BivariatePoly::separated(compose(u, f), compose(v, g));
  if (v.degree() >= 1) return image.divmod_y(curve).second.is_zero();
  if (u.degree() >= 1) return image.divmod_x(curve).second.is_zero();
  raise(ErrorKind::MalformedCurve, "curve has no variable");
}

bool verify_invariant(const BivariatePoly& curve, const Polynomial& f, const Polynomial& g) {
  auto [u, v] = curve.separate();
  return verify_invariant(u, v, f, g);
}

GraphForm medvedev_scanlon_form(const Polynomial& f, const CurveSystem& curve) {
  if (f.degree() < 2) raise(ErrorKind::InvalidParameters, "medvedev_scanlon_form: f needs degree >= 2");
  if (classify_special(f).is_special()) raise(ErrorKind::SpecialInput, "medvedev_scanlon_form: f is special");
  if (!verify_invariant(curve.u, curve.v, f, f)) {
    raise(ErrorKind::InvalidParameters, "medvedev_scanlon_form: curve is not (f, f)-invariant");
  }
  GraphForm out;
  if (curve.u.degree() == 1) {
    out.p = compose(AffineMap::from_polynomial(curve.u).inverse().as_polynomial(), curve.v);
    out.orientation = GraphOrientation::FirstOfSecond;
  } else if (curve.v.degree() == 1) {
    out.p = compose(AffineMap::from_polynomial(curve.v).inverse().as_polynomial(), curve.u);
    out.orientation = GraphOrientation::SecondOfFirst;
  } else {
    raise(ErrorKind::ConsistencyFailure, "medvedev_scanlon_form: curve is not a graph");
  }
  if (compose(out.p, f) != compose(f, out.p)) {
    raise(ErrorKind::ConsistencyFailure, "medvedev_scanlon_form: p does not commute with f");
  }
  return out;
}

LineCurves line_curves(const Polynomial& f, const Polynomial& g) {
  LineCurves out;
  const FieldRoots ff = field_roots(f - Polynomial::z());
  const FieldRoots gf = field_roots(g - Polynomial::z());
  for (const auto& [xi, mult] : ff.roots) out.lines.push_back({Polynomial::z(), Polynomial(xi), f, f, g, true});
  for (const auto& [eta, mult] : gf.roots) out.lines.push_back({Polynomial(eta), Polynomial::z(), g, f, g, true});
  out.complete = ff.complete && gf.complete;
  return out;
}

}  // namespace semiconj
