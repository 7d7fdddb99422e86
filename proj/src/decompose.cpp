#include "semiconj/decompose.hpp"

#include <cmath>
#include <complex>
#include <numeric>

#include "semiconj/errors.hpp"
#include "semiconj/linalg.hpp"
#include "semiconj/special_forms.hpp"

namespace semiconj {

namespace {

using cld = std::complex<long double>;
using CPoly = std::vector<cld>;

void require_divides(int d, int n, const char* op) {
  if (d < 1 || n < 0 || n % d != 0) {
    raise(ErrorKind::DegreeMismatch,
          std::string(op) + ": degree " + std::to_string(d) + " does not divide " + std::to_string(n));
  }
}

CPoly to_cpoly(const Polynomial& p) {
  CPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_complex_ld());
  return out;
}

CPoly cmul(const CPoly& a, const CPoly& b) {
  if (a.empty() || b.empty()) return {};
  CPoly out(a.size() + b.size() - 1, cld(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

CPoly ccompose(const CPoly& g, const CPoly& h) {
  CPoly acc{g.back()};
  for (std::size_t k = g.size() - 1; k-- > 0;) {
    acc = cmul(acc, h);
    acc[0] += g[k];
  }
  return acc;
}

// Whether G o H = P has a solution H over C, given that the monic part of
// H is forced to be M0 and only the leading coefficient and constant vary.
bool complex_right_quotient_exists(const Polynomial& p, const Polynomial& g, const Polynomial& m0,
                                   const std::vector<ExactScalar>& tried) {
  const int r = g.degree();
  const int n = p.degree();
  const int d = n / r;
  const cld ratio = (p.leading() / g.leading()).to_complex_ld();
  const long double mag = std::pow(std::abs(ratio), 1.0L / r);
  const long double arg = std::arg(ratio);
  const long double two_pi = 2.0L * std::acos(-1.0L);
  const CPoly P = to_cpoly(p);
  const CPoly G = to_cpoly(g);
  const CPoly M0 = to_cpoly(m0);
  long double scale = 1;
  for (const auto& c : P) scale = std::max(scale, std::abs(c));
  for (int k = 0; k < r; ++k) {
    const cld hd = std::polar(mag, (arg + two_pi * k) / r);
    bool seen = false;
    for (const auto& t : tried) {
      if (std::abs(t.to_complex_ld() - hd) < 1e-12L * (1 + mag)) seen = true;
    }
    if (seen) continue;
    CPoly h0 = M0;
    for (auto& c : h0) c *= hd;
    CPoly h0r{cld(1)};
    for (int i = 0; i < r; ++i) h0r = cmul(h0r, h0);
    const cld hd_pow = std::pow(hd, r - 1);
    const cld num = P[static_cast<std::size_t>(n - d)] - G[static_cast<std::size_t>(r)] * h0r[static_cast<std::size_t>(n - d)] -
                    G[static_cast<std::size_t>(r - 1)] * hd_pow;
    const cld c = num / (static_cast<long double>(r) * G[static_cast<std::size_t>(r)] * hd_pow);
    CPoly h = h0;
    h[0] += c;
    const CPoly comp = ccompose(G, h);
    bool ok = comp.size() == P.size();
    for (std::size_t i = 0; ok && i < P.size(); ++i) {
      if (std::abs(comp[i] - P[i]) > 1e-9L * scale) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

// Sorts r-th roots of x so the principal branch comes first, then by
// increasing angular distance from it.
void order_principal_first(std::vector<ExactScalar>& roots, const ExactScalar& x, int r) {
  const long double two_pi = 2.0L * std::acos(-1.0L);
  const long double principal = std::arg(x.to_complex_ld()) / r;
  auto distance = [&](const ExactScalar& w) {
    long double d = std::fmod(std::abs(std::arg(w.to_complex_ld()) - principal), two_pi);
    return std::min(d, two_pi - d);
  };
  std::stable_sort(roots.begin(), roots.end(),
                   [&](const ExactScalar& a, const ExactScalar& b) { return distance(a) < distance(b) - 1e-12L; });
}

}  // namespace

std::optional<Polynomial> left_quotient(const Polynomial& p, const Polynomial& h) {
  if (h.degree() < 1) raise(ErrorKind::InvalidParameters, "left_quotient: base must have degree >= 1");
  if (p.is_constant()) return p;
  require_divides(h.degree(), p.degree(), "left_quotient");
  if (p.degree() == h.degree()) {
    const ExactScalar a = p.leading() / h.leading();
    Polynomial rest = p - h * a;
    if (!rest.is_constant()) return std::nullopt;
    return Polynomial({rest.constant_term(), a});
  }
  AdicExpansion e = adic_expansion(p, h);
  std::vector<ExactScalar> g;
  g.reserve(e.digits.size());
  for (const auto& digit : e.digits) {
    if (!digit.is_constant()) return std::nullopt;
    g.push_back(digit.constant_term());
  }
  return Polynomial(std::move(g));
}

Polynomial approximate_right_factor(const Polynomial& p, int d) {
  require_divides(d, p.degree(), "approximate_right_factor");
  const int n = p.degree();
  const int r = n / d;
  const ExactScalar alpha1 = ExactScalar(1, r) + ExactScalar(1);
  std::vector<ExactScalar> t(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k) t[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(n - k)) / p.leading();
  std::vector<ExactScalar> s(static_cast<std::size_t>(d));
  s[0] = ExactScalar(1);
  for (int k = 1; k < d; ++k) {
    ExactScalar acc(0);
    for (int j = 1; j <= k; ++j) {
      const ExactScalar& tj = t[static_cast<std::size_t>(j)];
      if (tj.is_zero()) continue;
      acc += (alpha1 * ExactScalar(j) - ExactScalar(k)) * tj * s[static_cast<std::size_t>(k - j)];
    }
    s[static_cast<std::size_t>(k)] = acc / ExactScalar(k);
  }
  std::vector<ExactScalar> h(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k < d; ++k) h[static_cast<std::size_t>(d - k)] = s[static_cast<std::size_t>(k)];
  return Polynomial(std::move(h));
}

std::optional<FactorPair> right_factor_of_degree(const Polynomial& p, int d) {
  if (p.degree() < 1) raise(ErrorKind::DegreeMismatch, "right_factor_of_degree: polynomial must be nonconstant");
  require_divides(d, p.degree(), "right_factor_of_degree");
  if (d == 1) return FactorPair{p, Polynomial::z()};
  if (d == p.degree()) {
    return FactorPair{Polynomial({p.constant_term(), p.leading()}), normalize_right_factor(p)};
  }
  Polynomial h = approximate_right_factor(p, d);
  auto g = left_quotient(p, h);
  if (!g) return std::nullopt;
  return FactorPair{*g, h};
}

RightQuotient try_right_quotient(const Polynomial& p, const Polynomial& g) {
  const int r = g.degree();
  if (r < 1) raise(ErrorKind::InvalidParameters, "right_quotient: left factor must have degree >= 1");
  if (p.is_zero()) raise(ErrorKind::DegreeMismatch, "right_quotient: zero polynomial");
  require_divides(r, p.degree(), "right_quotient");
  RightQuotient out;
  if (r == 1) {
    out.status = QuotientStatus::Found;
    out.value = (p - Polynomial(g.constant_term())) / g.leading();
    return out;
  }
  if (p.is_constant()) {
    FieldRoots fr = field_roots(g - p);
    if (!fr.roots.empty()) {
      out.status = QuotientStatus::Found;
      out.value = Polynomial(fr.roots.front().first);
    } else {
      out.status = QuotientStatus::FieldObstruction;
    }
    return out;
  }
  const int n = p.degree();
  const int d = n / r;
  const Polynomial m0 = approximate_right_factor(p, d);
  std::vector<ExactScalar> leads = field_nth_roots(p.leading() / g.leading(), static_cast<unsigned>(r));
  order_principal_first(leads, p.leading() / g.leading(), r);
  for (const auto& hd : leads) {
    const Polynomial h0 = m0 * hd;
    const ExactScalar hd_pow = hd.pow(static_cast<unsigned long>(r - 1));
    const ExactScalar top = h0.pow(static_cast<unsigned>(r)).coeff(static_cast<std::size_t>(n - d));
    const ExactScalar c = (p.coeff(static_cast<std::size_t>(n - d)) - g.coeff(static_cast<std::size_t>(r)) * top -
                           g.coeff(static_cast<std::size_t>(r - 1)) * hd_pow) /
                          (ExactScalar(r) * g.leading() * hd_pow);
    Polynomial h = h0 + Polynomial(c);
    if (compose(g, h) == p) {
      out.status = QuotientStatus::Found;
      out.value = std::move(h);
      return out;
    }
  }
  out.status = complex_right_quotient_exists(p, g, m0, leads) ? QuotientStatus::FieldObstruction
                                                                : QuotientStatus::Absent;
  return out;
}

std::optional<Polynomial> right_quotient(const Polynomial& p, const Polynomial& g) {
  RightQuotient rq = try_right_quotient(p, g);
  if (rq.status == QuotientStatus::FieldObstruction) {
    raise(ErrorKind::FieldObstruction, "right factor of " + p.to_string() + " after " + g.to_string() +
                                           " exists only over C");
  }
  if (rq.status == QuotientStatus::Absent) return std::nullopt;
  return rq.value;
}

EngstromReduction engstrom_reduce(const Polynomial& a, const Polynomial& c, const Polynomial& d,
                                  const Polynomial& b) {
  if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1 || d.degree() < 1) {
    raise(ErrorKind::InvalidParameters, "engstrom_reduce: all factors must be nonconstant");
  }
  if (compose(a, c) != compose(d, b)) raise(ErrorKind::NotEqualComposite, "A o C differs from D o B");
  const int gv = std::gcd(c.degree(), b.degree());
  const int gu = std::gcd(a.degree(), d.degree());
  EngstromReduction out;
  auto cv = right_factor_of_degree(c, gv);
  if (!cv) raise(ErrorKind::ConsistencyFailure, "no right factor of C of degree " + std::to_string(gv));
  out.V = cv->right;
  out.C_tilde = cv->left;
  auto bt = left_quotient(b, out.V);
  if (!bt) raise(ErrorKind::ConsistencyFailure, "common right factor does not divide B");
  out.B_tilde = *bt;
  auto au = right_factor_of_degree(a, a.degree() / gu);
  if (!au) raise(ErrorKind::ConsistencyFailure, "no left factor of A of degree " + std::to_string(gu));
  out.U = au->left;
  out.A_tilde = au->right;
  auto dt = left_quotient(compose(out.A_tilde, out.C_tilde), out.B_tilde);
  if (!dt || compose(out.U, *dt) != d) raise(ErrorKind::ConsistencyFailure, "reduced tuple does not close");
  out.D_tilde = *dt;
  return out;
}

RittMove ritt_move(const RittMoveForm& input) {
  RittMoveForm form = input;
  if (form.family == RittFamily::Chebyshev) {
    if (form.m < 1 || form.n < 1 || std::gcd(form.m, form.n) != 1) {
      raise(ErrorKind::InvalidParameters, "Chebyshev move needs gcd(m, n) = 1");
    }
    if (form.n == 2) {
      const Polynomial tm = chebyshev(form.m);
      std::vector<ExactScalar> sc;
      for (int k = 1; k <= form.m; k += 2) sc.push_back(tm.coeff(static_cast<std::size_t>(k)));
      const AffineMap shift(ExactScalar(2), ExactScalar(-1));
      form.family = RittFamily::Power;
      form.s = 1;
      form.R = Polynomial(std::move(sc));
      form.nu = form.nu.then_after(shift);
      form.sigma1 = form.sigma1.then_after(shift);
    }
  } else {
    if (form.n < 1 || form.s < 0 || std::gcd(form.s, form.n) != 1) {
      raise(ErrorKind::InvalidParameters, "power move needs gcd(s, n) = 1");
    }
    if (form.R.is_zero()) raise(ErrorKind::InvalidParameters, "power move needs R != 0");
  }

  Polynomial outer_a, inner_c, outer_d, inner_b;
  if (form.family == RittFamily::Power) {
    const Polynomial zs = Polynomial::monomial(ExactScalar(1), static_cast<std::size_t>(form.s));
    const Polynomial zn = Polynomial::monomial(ExactScalar(1), static_cast<std::size_t>(form.n));
    outer_a = zs * form.R.pow(static_cast<unsigned>(form.n));
    inner_c = zn;
    outer_d = zn;
    inner_b = zs * compose(form.R, zn);
  } else {
    outer_a = chebyshev(form.m);
    inner_c = chebyshev(form.n);
    outer_d = chebyshev(form.n);
    inner_b = chebyshev(form.m);
  }
  const Polynomial nu = form.nu.as_polynomial();
  const Polynomial mu = form.mu.as_polynomial();
  RittMove out;
  out.first.left = compose(nu, compose(outer_a, form.sigma1.inverse().as_polynomial()));
  out.first.right = compose(form.sigma1.as_polynomial(), compose(inner_c, mu));
  out.second.left = compose(nu, compose(outer_d, form.sigma2.inverse().as_polynomial()));
  out.second.right = compose(form.sigma2.as_polynomial(), compose(inner_b, mu));
  out.composite = compose(out.first.left, out.first.right);
  if (compose(out.second.left, out.second.right) != out.composite) {
    raise(ErrorKind::ConsistencyFailure, "Ritt move sides differ");
  }
  out.form = std::move(form);
  return out;
}

std::optional<std::pair<Polynomial, Polynomial>> join_pair(const Polynomial& pi, const Polynomial& rho) {
  const int dp = pi.degree();
  const int dr = rho.degree();
  if (dp < 1 || dr < 1) raise(ErrorKind::InvalidParameters, "join_pair: degrees must be >= 1");
  const int lcm = std::lcm(dp, dr);
  const int a = lcm / dp;
  const int bdeg = lcm / dr;

  // Column i-1 holds the nonconstant digit coefficients of pi^i in base rho.
  std::vector<std::vector<ExactScalar>> columns;
  Polynomial power(1);
  for (int i = 1; i <= a; ++i) {
    power = power * pi;
    AdicExpansion e = adic_expansion(power, rho);
    std::vector<ExactScalar> col;
    for (int j = 0; j <= bdeg; ++j) {
      const Polynomial& digit = static_cast<std::size_t>(j) < e.digits.size() ? e.digits[static_cast<std::size_t>(j)]
                                                                             : Polynomial();
      for (int k = 1; k < dr; ++k) col.push_back(digit.coeff(static_cast<std::size_t>(k)));
    }
    columns.push_back(std::move(col));
  }
  const std::size_t rows = columns.back().size();
  const std::size_t unknowns = static_cast<std::size_t>(a - 1);
  Matrix m(rows, std::vector<ExactScalar>(unknowns));
  std::vector<ExactScalar> rhs(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t i = 0; i < unknowns; ++i) m[r][i] = columns[i][r];
    rhs[r] = -columns.back()[r];
  }
  auto sol = solve_linear(std::move(m), std::move(rhs), unknowns);
  if (!sol) return std::nullopt;
  std::vector<ExactScalar> uc(static_cast<std::size_t>(a) + 1);
  for (std::size_t i = 0; i < unknowns; ++i) uc[i + 1] = sol->x[i];
  uc[static_cast<std::size_t>(a)] = ExactScalar(1);
  Polynomial u(std::move(uc));
  const Polynomial target = compose(u, pi);
  auto v = left_quotient(target, rho);
  if (!v) return std::nullopt;
  return std::make_pair(std::move(u), std::move(*v));
}

JoinMeet join_meet(const Polynomial& x1, const Polynomial& x2, const Polynomial& b) {
  if (b.degree() < 2) raise(ErrorKind::InvalidParameters, "join_meet: B must have degree >= 2");
  if (x1.degree() < 1 || x2.degree() < 1) raise(ErrorKind::InvalidParameters, "join_meet: X1, X2 must be nonconstant");
  if (classify_special(b).is_special()) raise(ErrorKind::SpecialInput, "join_meet: B is special");
  for (const Polynomial* x : {&x1, &x2}) {
    if (!left_quotient(compose(*x, b), *x)) raise(ErrorKind::NotInE, x->to_string() + " is not in E(B)");
  }
  JoinMeet out;
  const int g = std::gcd(x1.degree(), x2.degree());
  auto w = right_factor_of_degree(x1, g);
  if (!w) raise(ErrorKind::ConsistencyFailure, "join_meet: X1 has no right factor of degree " + std::to_string(g));
  out.W = w->right;
  out.V1 = w->left;
  auto v2 = left_quotient(x2, out.W);
  if (!v2) raise(ErrorKind::ConsistencyFailure, "join_meet: meet does not divide X2");
  out.V2 = *v2;
  auto uv = join_pair(x1, x2);
  if (!uv) raise(ErrorKind::ConsistencyFailure, "join_meet: no common left composite of degree lcm");
  out.U1 = uv->first;
  out.U2 = uv->second;
  out.X = compose(out.U1, x1);
  return out;
}

}  // namespace semiconj
