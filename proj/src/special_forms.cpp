#include "semiconj/special_forms.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <tuple>

#include "semiconj/errors.hpp"

namespace semiconj {

namespace {

ExactScalar signed_pow(const ExactScalar& x, long e) {
  if (e >= 0) return x.pow(static_cast<unsigned long>(e));
  return ExactScalar(1) / x.pow(static_cast<unsigned long>(-e));
}

bool lex_less_map(const AffineMap& x, const AffineMap& y) {
  if (x.a() != y.a()) return lex_less(x.a(), y.a());
  return lex_less(x.b(), y.b());
}

// Exact test against the centered coefficient pattern of T_n: after
// centering, P~(z) = s T_n(beta z) / beta for some complex beta and s = +-1.
// Returns the kind, or NotSpecial when no such beta exists.
SpecialKind chebyshev_pattern(const Polynomial& pc, int n, ExactScalar& beta_sq_inv) {
  const Polynomial t = chebyshev(n);
  const ExactScalar& cn = pc.leading();
  const ExactScalar& cm = pc.coeff(static_cast<std::size_t>(n - 2));
  if (cm.is_zero()) return SpecialKind::NotSpecial;
  const ExactScalar tn = t.leading();
  const ExactScalar tm = t.coeff(static_cast<std::size_t>(n - 2));
  const ExactScalar a2 = cm * tn / (cn * tm);  // alpha^2 with alpha = 1 / beta
  for (int k = 0; k <= n; ++k) {
    const ExactScalar& ck = pc.coeff(static_cast<std::size_t>(k));
    if ((n - k) % 2 != 0) {
      if (!ck.is_zero()) return SpecialKind::NotSpecial;
      continue;
    }
    const ExactScalar expected = t.coeff(static_cast<std::size_t>(k)) / tn * a2.pow(static_cast<unsigned long>((n - k) / 2));
    if (ck / cn != expected) return SpecialKind::NotSpecial;
  }
  beta_sq_inv = a2;
  if (n % 2 == 1) {
    const ExactScalar s = cn * a2.pow(static_cast<unsigned long>((n - 1) / 2)) / tn;
    if (s == ExactScalar(1)) return SpecialKind::ChebyshevPlus;
    if (s == ExactScalar(-1)) return SpecialKind::ChebyshevMinus;
    return SpecialKind::NotSpecial;
  }
  if (cn * cn * a2.pow(static_cast<unsigned long>(n - 1)) == tn * tn) return SpecialKind::ChebyshevPlus;
  return SpecialKind::NotSpecial;
}

// Normalizing map sigma with sigma({-1, 1}) = {a, b}; classifies
// sigma^-1 o P o sigma against +-T_n.
std::optional<SpecialClassification> chebyshev_from_pair(const Polynomial& p, const ExactScalar& a,
                                                         const ExactScalar& b) {
  const int n = p.degree();
  const Polynomial t = chebyshev(n);
  const ExactScalar half(1, 2);
  const AffineMap sigma((b - a) * half, (a + b) * half);
  const Polynomial q = affine_conjugate(p, sigma.inverse());
  SpecialClassification out;
  out.K = std::make_pair(a, b);
  if (q == t) {
    out.kind = SpecialKind::ChebyshevPlus;
    out.witness = sigma;
    return out;
  }
  if (q == -t) {
    if (n % 2 == 0) {
      out.kind = SpecialKind::ChebyshevPlus;
      out.witness = sigma.then_after(AffineMap(ExactScalar(-1), ExactScalar(0)));
    } else {
      out.kind = SpecialKind::ChebyshevMinus;
      out.witness = sigma;
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

const char* to_string(SpecialKind kind) {
  switch (kind) {
    case SpecialKind::Power: return "power";
    case SpecialKind::ChebyshevPlus: return "chebyshev-plus";
    case SpecialKind::ChebyshevMinus: return "chebyshev-minus";
    case SpecialKind::NotSpecial: return "not-special";
    case SpecialKind::UndecidedField: return "undecided-field";
  }
  return "unknown";
}

Polynomial chebyshev(int n) {
  if (n < 0) raise(ErrorKind::InvalidParameters, "chebyshev: n must be >= 0");
  Polynomial prev(1);
  if (n == 0) return prev;
  Polynomial cur = Polynomial::z();
  const Polynomial two_z = Polynomial::monomial(ExactScalar(2), 1);
  for (int k = 1; k < n; ++k) {
    Polynomial next = two_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Polynomial centered_form(const Polynomial& p) {
  return affine_conjugate(p, AffineMap(ExactScalar(1), -center_point(p)));
}

SpecialClassification classify_special(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) raise(ErrorKind::InvalidParameters, "classify_special: degree must be >= 2");
  SpecialClassification out;

  // Power: P' = n c_n (z - b)^(n-1) with P(b) = b.
  const ExactScalar b = center_point(p);
  const Polynomial linear({-b, ExactScalar(1)});
  if (p.derivative() == linear.pow(static_cast<unsigned>(n - 1)) * (p.leading() * ExactScalar(n)) &&
      p.evaluate(b) == b) {
    out.kind = SpecialKind::Power;
    out.witness = AffineMap(ExactScalar(1), b);
    return out;
  }

  // Chebyshev via a two-point set K among field critical values and fixed points.
  CriticalData cd = derivative_and_critical_data(p);
  std::vector<ExactScalar> candidates = cd.values;
  for (const auto& [root, mult] : field_roots(p - Polynomial::z()).roots) candidates.push_back(root);
  std::sort(candidates.begin(), candidates.end(), lex_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const ExactScalar& a = candidates[i];
      const ExactScalar& c = candidates[j];
      const Polynomial prod = (p - Polynomial(a)) * (p - Polynomial(c));
      const Polynomial target = Polynomial({-a, ExactScalar(1)}) * Polynomial({-c, ExactScalar(1)});
      if (odd_part(prod) != target) continue;
      if (auto found = chebyshev_from_pair(p, a, c)) return *found;
    }
  }

  // Exact coefficient pattern after centering; covers K outside Q(i).
  const Polynomial pc = centered_form(p);
  ExactScalar alpha_sq;
  const SpecialKind kind = chebyshev_pattern(pc, n, alpha_sq);
  if (kind == SpecialKind::NotSpecial) return out;
  out.kind = kind;
  const Polynomial t = chebyshev(n);
  for (const auto& alpha : field_nth_roots(alpha_sq, 2)) {
    const AffineMap lambda(alpha, b);  // z / beta + b
    const Polynomial q = affine_conjugate(p, lambda.inverse());
    if (q == t || (kind == SpecialKind::ChebyshevMinus && q == -t)) {
      out.witness = lambda;
      out.K = std::make_pair(lambda(ExactScalar(-1)), lambda(ExactScalar(1)));
      if (lex_less(out.K->second, out.K->first)) std::swap(out.K->first, out.K->second);
      break;
    }
  }
  return out;
}

SymmetryProfile symmetry_order(const Polynomial& p) {
  const int n = p.degree();
  if (n < 2) raise(ErrorKind::InvalidParameters, "symmetry_order: degree must be >= 2");
  SymmetryProfile out;
  out.center = center_point(p);
  const Polynomial pc = centered_form(p);
  int ell = 0;
  for (int k = 0; k <= n; ++k) {
    if (!pc.coeff(static_cast<std::size_t>(k)).is_zero()) ell = std::gcd(ell, std::abs(k - 1));
  }
  out.ell = ell == 0 ? 1 : ell;
  for (const ExactScalar& eps : {ExactScalar(1), ExactScalar(-1), ExactScalar::i(), -ExactScalar::i()}) {
    if (eps.pow(static_cast<unsigned long>(out.ell)) != ExactScalar(1)) continue;
    const Polynomial ez = Polynomial::monomial(eps, 1);
    if (compose(pc, ez) == pc * eps) out.field_units.push_back(eps);
  }
  return out;
}

std::vector<AffineMap> affine_conjugacies(const Polynomial& p, const Polynomial& q) {
  const int n = p.degree();
  if (n < 2 || q.degree() != n) {
    if (n < 2) raise(ErrorKind::InvalidParameters, "affine_conjugacies: degree must be >= 2");
    return {};
  }
  const ExactScalar bp = center_point(p);
  const ExactScalar bq = center_point(q);
  const Polynomial pc = centered_form(p);
  const Polynomial qc = centered_form(q);
  std::vector<AffineMap> out;
  for (const auto& alpha : field_nth_roots(pc.leading() / qc.leading(), static_cast<unsigned>(n - 1))) {
    const AffineMap scale(alpha, ExactScalar(0));
    if (affine_conjugate(pc, scale) != qc) continue;
    // mu = (z + bq) o (alpha z) o (z - bp)
    out.emplace_back(alpha, bq - alpha * bp);
  }
  std::sort(out.begin(), out.end(), lex_less_map);
  return out;
}

bool conjugate_over_c(const Polynomial& p, const Polynomial& q) {
  if (p.degree() != q.degree()) return false;
  const int n = p.degree();
  if (n <= 0) return p == q;
  if (n == 1) {
    if (p.leading() != q.leading()) return false;
    if (!p.leading().is_one()) return true;
    return p.constant_term().is_zero() == q.constant_term().is_zero();
  }
  const Polynomial pc = centered_form(p);
  const Polynomial qc = centered_form(q);
  // Need alpha with q_k = alpha^(1-k) p_k, i.e. alpha^(k-1) = p_k / q_k.
  std::vector<long> exps;
  std::vector<ExactScalar> ratios;
  for (int k = 0; k <= n; ++k) {
    const ExactScalar& pk = pc.coeff(static_cast<std::size_t>(k));
    const ExactScalar& qk = qc.coeff(static_cast<std::size_t>(k));
    if (pk.is_zero() != qk.is_zero()) return false;
    if (pk.is_zero()) continue;
    const ExactScalar r = pk / qk;
    if (k == 1) {
      if (!r.is_one()) return false;
      continue;
    }
    exps.push_back(k - 1);
    ratios.push_back(r);
  }
  // Bezout: g = sum c_i e_i, so alpha^g = prod r_i^c_i =: rho is forced, and
  // alpha^(e_i) = rho^(e_i / g) must reproduce every r_i.
  long g = exps[0];
  std::vector<long> coef(exps.size(), 0);
  coef[0] = 1;
  for (std::size_t i = 1; i < exps.size(); ++i) {
    long old_r = g, r = exps[i], old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long qt = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
      std::tie(old_t, t) = std::make_pair(t, old_t - qt * t);
    }
    for (std::size_t j = 0; j < i; ++j) coef[j] *= old_s;
    coef[i] = old_t;
    g = old_r;
  }
  if (g < 0) {
    g = -g;
    for (auto& c : coef) c = -c;
  }
  ExactScalar rho(1);
  for (std::size_t i = 0; i < exps.size(); ++i) rho *= signed_pow(ratios[i], coef[i]);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (signed_pow(rho, exps[i] / g) != ratios[i]) return false;
  }
  return true;
}

}  // namespace semiconj
