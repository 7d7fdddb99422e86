#include "semiconj/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "semiconj/errors.hpp"

namespace semiconj {

namespace {

const ExactScalar& zero_scalar() {
  static const ExactScalar kZero(0);
  return kZero;
}

}  // namespace

Polynomial Polynomial::monomial(ExactScalar c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<ExactScalar> v(k + 1);
  v[k] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const ExactScalar& Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : zero_scalar();
}

const ExactScalar& Polynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

ExactScalar Polynomial::evaluate(const ExactScalar& x) const {
  ExactScalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

std::complex<double> Polynomial::evaluate(std::complex<double> x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this / leading();
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<ExactScalar> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * ExactScalar(static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial& Polynomial::operator/=(const ExactScalar& c) {
  for (auto& x : coeffs_) x /= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactScalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const ExactScalar& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string mono;
    if (k >= 1) {
      mono = std::string(1, var);
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (c.is_real()) {
      bool negative = sgn(c.re()) < 0;
      mpq_class mag = abs(c.re());
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      if (k == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += mono;
      }
    } else {
      if (!first) out += " + ";
      out += c.to_string();
      if (k >= 1) out += "*" + mono;
    }
    first = false;
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw std::domain_error("polynomial division by zero");
  if (num.degree() < den.degree()) return {Polynomial(), num};
  std::vector<ExactScalar> rem = num.coeffs();
  const int dd = den.degree();
  const int qd = num.degree() - dd;
  std::vector<ExactScalar> quot(static_cast<std::size_t>(qd) + 1);
  const ExactScalar inv_lead = ExactScalar(1) / den.leading();
  const bool monic_den = den.leading().is_one();
  for (int k = qd; k >= 0; --k) {
    ExactScalar& top = rem[static_cast<std::size_t>(k + dd)];
    if (top.is_zero()) continue;
    ExactScalar q = monic_den ? top : top * inv_lead;
    for (int j = 0; j < dd; ++j) {
      const ExactScalar& dj = den.coeffs()[static_cast<std::size_t>(j)];
      if (dj.is_zero()) continue;
      rem[static_cast<std::size_t>(k + j)] -= q * dj;
    }
    top = ExactScalar(0);
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw std::logic_error("exact_quotient: nonzero remainder");
  return q;
}

Polynomial compose(const Polynomial& p, const Polynomial& q, long degree_cap) {
  if (p.is_constant()) return p;
  if (q.is_constant()) return Polynomial(p.evaluate(q.constant_term()));
  const long result_degree = static_cast<long>(p.degree()) * q.degree();
  if (result_degree > degree_cap) {
    raise(ErrorKind::BudgetExceeded,
          "composite degree " + std::to_string(result_degree) + " exceeds cap " + std::to_string(degree_cap));
  }
  if (q == Polynomial::z()) return p;
  const auto& c = p.coeffs();
  Polynomial acc(c.back());
  for (int k = p.degree() - 1; k >= 0; --k) {
    acc = acc * q;
    acc += Polynomial(c[static_cast<std::size_t>(k)]);
  }
  return acc;
}

Polynomial iterate(const Polynomial& p, unsigned k, long degree_cap) {
  if (k == 0) return Polynomial::z();
  if (p.degree() < 1) throw std::invalid_argument("iterate: degree must be >= 1");
  long deg = 1;
  for (unsigned i = 0; i < k; ++i) {
    deg *= p.degree();
    if (deg > degree_cap) {
      raise(ErrorKind::BudgetExceeded, "iterate degree exceeds cap " + std::to_string(degree_cap));
    }
  }
  Polynomial acc = p;
  for (unsigned i = 1; i < k; ++i) acc = compose(p, acc, degree_cap);
  return acc;
}

Polynomial gcd(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) is undefined");
  Polynomial a = p.monic();
  Polynomial b = q.monic();
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> factors;
  if (p.degree() < 1) return factors;
  Polynomial f = p.monic();
  Polynomial fp = f.derivative();
  Polynomial a0 = gcd(f, fp);
  Polynomial b = exact_quotient(f, a0);
  Polynomial c = exact_quotient(fp, a0);
  Polynomial d = c - b.derivative();
  while (b.degree() >= 1) {
    Polynomial a = gcd(b, d);
    b = exact_quotient(b, a);
    c = exact_quotient(d, a);
    d = c - b.derivative();
    factors.push_back(std::move(a));
  }
  return factors;
}

Polynomial odd_part(const Polynomial& p) {
  Polynomial out(1);
  auto factors = squarefree_decomposition(p);
  for (std::size_t i = 0; i < factors.size(); i += 2) out = out * factors[i];
  return out.monic();
}

Polynomial AdicExpansion::reconstruct() const {
  Polynomial acc;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) acc = acc * base + *it;
  return acc;
}

bool AdicExpansion::all_digits_constant() const {
  return std::all_of(digits.begin(), digits.end(), [](const Polynomial& d) { return d.is_constant(); });
}

AdicExpansion adic_expansion(const Polynomial& p, const Polynomial& h) {
  if (h.degree() < 1) throw std::invalid_argument("adic_expansion: base must have degree >= 1");
  AdicExpansion out{h, {}};
  const std::size_t count = p.is_zero() ? 1 : static_cast<std::size_t>(p.degree() / h.degree()) + 1;
  Polynomial rest = p;
  for (std::size_t i = 0; i < count; ++i) {
    auto [q, r] = divmod(rest, h);
    out.digits.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

AffineMap::AffineMap(ExactScalar a, ExactScalar b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.is_zero()) throw std::invalid_argument("AffineMap: slope must be nonzero");
}

AffineMap AffineMap::from_polynomial(const Polynomial& p) {
  if (p.degree() != 1) throw std::invalid_argument("AffineMap: polynomial is not of degree one");
  return {p.coeff(1), p.coeff(0)};
}

AffineMap AffineMap::inverse() const {
  ExactScalar ia = ExactScalar(1) / a_;
  return {ia, -(b_ * ia)};
}

AffineMap AffineMap::then_after(const AffineMap& other) const {
  return {a_ * other.a_, a_ * other.b_ + b_};
}

AffineMap AffineMap::pow(unsigned k) const {
  AffineMap acc;
  for (unsigned i = 0; i < k; ++i) acc = then_after(acc);
  return acc;
}

Polynomial affine_conjugate(const Polynomial& p, const AffineMap& lambda) {
  Polynomial inner = compose(p, lambda.inverse().as_polynomial());
  return compose(lambda.as_polynomial(), inner);
}

Polynomial taylor_shift(const Polynomial& p, const ExactScalar& c) {
  return compose(p, Polynomial({c, ExactScalar(1)}));
}

ExactScalar center_point(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("center_point: degree must be >= 1");
  const long n = p.degree();
  return -p.coeff(static_cast<std::size_t>(n - 1)) / (p.leading() * ExactScalar(n));
}

Polynomial normalize_right_factor(const Polynomial& p) {
  if (p.degree() < 1) throw std::invalid_argument("normalize_right_factor: degree must be >= 1");
  return (p - Polynomial(p.constant_term())) / p.leading();
}

// ---------------------------------------------------------------------------
// Root finding over Q(i).

namespace {

using cld = std::complex<long double>;

std::optional<ExactScalar> gaussian_sqrt(const ExactScalar& w) {
  if (w.is_zero()) return ExactScalar(0);
  mpq_class r;
  if (w.is_real()) {
    if (sgn(w.re()) >= 0) {
      if (rational_sqrt(w.re(), r)) return ExactScalar(r);
      return std::nullopt;
    }
    if (rational_sqrt(-w.re(), r)) return ExactScalar(mpq_class(0), r);
    return std::nullopt;
  }
  mpq_class modulus;
  if (!rational_sqrt(w.norm(), modulus)) return std::nullopt;
  mpq_class x2 = (modulus + w.re()) / 2;
  mpq_class x;
  if (!rational_sqrt(x2, x) || sgn(x) == 0) return std::nullopt;
  mpq_class y = w.im() / (2 * x);
  ExactScalar s(x, y);
  if (s * s != w) return std::nullopt;
  return s;
}

std::vector<ExactScalar> quadratic_roots(const Polynomial& q) {
  const ExactScalar& a = q.coeff(2);
  const ExactScalar& b = q.coeff(1);
  const ExactScalar& c = q.coeff(0);
  ExactScalar disc = b * b - ExactScalar(4) * a * c;
  auto s = gaussian_sqrt(disc);
  if (!s) return {};
  ExactScalar two_a = ExactScalar(2) * a;
  std::vector<ExactScalar> out{(-b + *s) / two_a};
  if (!s->is_zero()) out.push_back((-b - *s) / two_a);
  return out;
}

mpz_class lcm_of_denominators(const Polynomial& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.im().get_den_mpz_t());
  }
  return l;
}

/// Candidate Gaussian integers near t (nearest plus the 8 neighbours).
std::vector<ExactScalar> gaussian_integers_near(cld t) {
  std::vector<ExactScalar> out;
  const long double lim = 4.0e18L;
  if (!std::isfinite(t.real()) || !std::isfinite(t.imag()) || std::fabs(t.real()) > lim ||
      std::fabs(t.imag()) > lim) {
    return out;
  }
  const long long re0 = std::llround(t.real());
  const long long im0 = std::llround(t.imag());
  for (long long dr : {0LL, -1LL, 1LL}) {
    for (long long di : {0LL, -1LL, 1LL}) {
      out.emplace_back(mpq_class(mpz_class(std::to_string(re0 + dr))),
                       mpq_class(mpz_class(std::to_string(im0 + di))));
    }
  }
  return out;
}

/// Exact roots of a squarefree polynomial in Q(i).
std::pair<std::vector<ExactScalar>, bool> squarefree_field_roots(Polynomial q) {
  std::vector<ExactScalar> found;
  if (q.degree() >= 3) {
    auto approx = numeric_roots(q);
    for (const auto& r : approx) {
      if (q.degree() <= 2) break;
      // By the rational root theorem, lead * root is a Gaussian integer once
      // q has Gaussian-integer coefficients.
      Polynomial qi = q * ExactScalar(mpq_class(lcm_of_denominators(q)));
      ExactScalar lead = qi.leading();
      cld t = lead.to_complex_ld() * r;
      for (const auto& g : gaussian_integers_near(t)) {
        ExactScalar cand = g / lead;
        if (q.evaluate(cand).is_zero()) {
          found.push_back(cand);
          q = exact_quotient(q, Polynomial({-cand, ExactScalar(1)}));
          break;
        }
      }
    }
  }
  if (q.degree() == 1) {
    found.push_back(-q.coeff(0) / q.coeff(1));
    q = Polynomial(1);
  } else if (q.degree() == 2) {
    auto qr = quadratic_roots(q);
    if (!qr.empty()) {
      found.insert(found.end(), qr.begin(), qr.end());
      q = Polynomial(1);
    }
  }
  return {found, q.degree() <= 0};
}

}  // namespace

std::vector<std::complex<long double>> numeric_roots(const Polynomial& p) {
  const int n = p.degree();
  if (n < 1) return {};
  std::vector<cld> c(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k)).to_complex_ld();
  const cld lead = c.back();
  for (auto& x : c) x /= lead;
  long double bound = 0.0L;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(k)]));
  bound = 1.0L + bound;

  auto eval = [&](cld z, cld& dp) {
    cld v = c.back();
    dp = 0;
    for (int k = n - 1; k >= 0; --k) {
      dp = dp * z + v;
      v = v * z + c[static_cast<std::size_t>(k)];
    }
    return v;
  };

  std::vector<cld> z(static_cast<std::size_t>(n));
  const long double radius = std::min(bound, 1.0L + std::pow(std::abs(c[0]), 1.0L / n));
  for (int k = 0; k < n; ++k) {
    long double ang = 2.0L * std::numbers::pi_v<long double> * k / n + 0.4L;
    z[static_cast<std::size_t>(k)] = std::polar(radius, ang);
  }
  for (int iter = 0; iter < 2000; ++iter) {
    long double worst = 0.0L;
    for (int k = 0; k < n; ++k) {
      auto& zk = z[static_cast<std::size_t>(k)];
      cld dp;
      cld v = eval(zk, dp);
      if (v == cld(0)) continue;
      cld ratio = v / dp;
      cld sum = 0;
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        cld diff = zk - z[static_cast<std::size_t>(j)];
        if (diff != cld(0)) sum += cld(1) / diff;
      }
      cld w = ratio / (cld(1) - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      zk -= w;
      worst = std::max(worst, std::abs(w) / (1.0L + std::abs(zk)));
    }
    if (worst < 1e-17L) break;
  }
  // Newton polish against the original coefficients.
  for (auto& zk : z) {
    for (int it = 0; it < 5; ++it) {
      cld dp;
      cld v = eval(zk, dp);
      if (dp == cld(0)) break;
      cld step = v / dp;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
      zk -= step;
    }
  }
  return z;
}

FieldRoots field_roots(const Polynomial& p) {
  FieldRoots out;
  if (p.degree() < 1) {
    out.complete = !p.is_zero();
    return out;
  }
  auto factors = squarefree_decomposition(p);
  int found_degree = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].degree() < 1) continue;
    auto [roots, complete] = squarefree_field_roots(factors[i]);
    (void)complete;
    for (auto& r : roots) {
      out.roots.emplace_back(std::move(r), static_cast<int>(i) + 1);
      found_degree += static_cast<int>(i) + 1;
    }
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
  out.complete = found_degree == p.degree();
  return out;
}

std::vector<ExactScalar> field_nth_roots(const ExactScalar& x, unsigned k) {
  if (k == 0) throw std::invalid_argument("field_nth_roots: k must be positive");
  if (x.is_zero()) return {ExactScalar(0)};
  if (k == 1) return {x};
  std::vector<ExactScalar> out;
  auto push_unique = [&](const ExactScalar& w) {
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  };
  if (k == 2) {
    if (auto s = gaussian_sqrt(x)) {
      push_unique(*s);
      push_unique(-*s);
    }
  } else {
    mpz_class den;
    mpz_lcm(den.get_mpz_t(), x.re().get_den_mpz_t(), x.im().get_den_mpz_t());
    const ExactScalar dscalar{mpq_class(den)};
    const cld xv = x.to_complex_ld();
    const long double mag = std::pow(std::abs(xv), 1.0L / k);
    const long double arg = std::arg(xv);
    for (unsigned j = 0; j < k; ++j) {
      cld w = std::polar(mag, (arg + 2.0L * std::numbers::pi_v<long double> * j) / k);
      for (const auto& g : gaussian_integers_near(w * static_cast<long double>(den.get_d()))) {
        ExactScalar cand = g / dscalar;
        if (cand.pow(k) == x) {
          push_unique(cand);
          break;
        }
      }
    }
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

CriticalData derivative_and_critical_data(const Polynomial& p) {
  if (p.degree() < 2) throw std::invalid_argument("critical data requires degree >= 2");
  CriticalData out;
  out.derivative = p.derivative();
  FieldRoots fr = field_roots(out.derivative);
  for (const auto& [r, m] : fr.roots) {
    out.points.push_back(r);
    ExactScalar v = p.evaluate(r);
    if (std::find(out.values.begin(), out.values.end(), v) == out.values.end()) out.values.push_back(v);
  }
  std::sort(out.values.begin(), out.values.end(), lex_less);
  out.split = fr.complete;
  return out;
}

}  // namespace semiconj
