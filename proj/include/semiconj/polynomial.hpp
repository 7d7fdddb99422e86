#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/scalar.hpp"

namespace semiconj {

/// Default cap on the degree of any composite or iterate the engine forms.
inline constexpr long kDefaultDegreeCap = 100000;

/// Dense univariate polynomial over Q(i). Coefficient k is the coefficient
/// of z^k; there are never trailing zeros, so the zero polynomial has an
/// empty coefficient vector and degree kZeroDegree.
class Polynomial {
 public:
  static constexpr int kZeroDegree = -1;

  Polynomial() = default;
  Polynomial(ExactScalar c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
  }
  Polynomial(long c) : Polynomial(ExactScalar(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Polynomial(std::vector<ExactScalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<ExactScalar> coeffs) : coeffs_(coeffs) { trim(); }

  /// The identity polynomial z.
  static Polynomial z() { return Polynomial({ExactScalar(0), ExactScalar(1)}); }
  static Polynomial monomial(ExactScalar c, std::size_t k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  /// Coefficient of z^k (zero above the degree).
  const ExactScalar& coeff(std::size_t k) const;
  const ExactScalar& leading() const;
  ExactScalar constant_term() const { return is_zero() ? ExactScalar(0) : coeffs_[0]; }

  ExactScalar evaluate(const ExactScalar& x) const;
  std::complex<double> evaluate(std::complex<double> x) const;

  Polynomial monic() const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const ExactScalar& c);
  Polynomial& operator/=(const ExactScalar& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const ExactScalar& c) { return a *= c; }
  friend Polynomial operator*(const ExactScalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator/(Polynomial a, const ExactScalar& c) { return a /= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;

  /// Canonical text form, e.g. `4*z^3 - 3*z`.
  std::string to_string(char var = 'z') const;

 private:
  void trim();
  std::vector<ExactScalar> coeffs_;
};

/// Quotient and remainder of exact division; throws std::domain_error for a
/// zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& num, const Polynomial& den);
/// Quotient of an exact division; throws std::logic_error on nonzero remainder.
Polynomial exact_quotient(const Polynomial& num, const Polynomial& den);

/// P(Q(z)). Throws BudgetExceeded if the result degree would exceed `degree_cap`.
Polynomial compose(const Polynomial& p, const Polynomial& q, long degree_cap = kDefaultDegreeCap);
/// P composed with itself k times; iterate(P, 0) = z.
Polynomial iterate(const Polynomial& p, unsigned k, long degree_cap = kDefaultDegreeCap);

/// Monic gcd; gcd(P, 0) = monic(P). Both zero is rejected.
Polynomial gcd(const Polynomial& p, const Polynomial& q);

/// Yun squarefree decomposition: P = c * prod_i factors[i]^(i+1) with each
/// factor monic and squarefree (possibly 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Monic product of (z - r) over roots r of odd multiplicity.
Polynomial odd_part(const Polynomial& p);

struct AdicExpansion {
  Polynomial base;
  std::vector<Polynomial> digits;  ///< digits[i] multiplies base^i

  Polynomial reconstruct() const;
  bool all_digits_constant() const;
};

/// Base-H digit expansion of P; requires deg H >= 1.
AdicExpansion adic_expansion(const Polynomial& p, const Polynomial& h);

/// The affine map z -> a z + b with a != 0.
class AffineMap {
 public:
  AffineMap() : a_(1), b_(0) {}
  AffineMap(ExactScalar a, ExactScalar b);

  static AffineMap identity() { return {}; }
  /// Reads a degree-one polynomial as an affine map.
  static AffineMap from_polynomial(const Polynomial& p);

  const ExactScalar& a() const { return a_; }
  const ExactScalar& b() const { return b_; }

  ExactScalar operator()(const ExactScalar& z) const { return a_ * z + b_; }
  AffineMap inverse() const;
  /// (this o other)(z) = this(other(z)).
  AffineMap then_after(const AffineMap& other) const;
  AffineMap pow(unsigned k) const;
  Polynomial as_polynomial() const { return Polynomial({b_, a_}); }
  bool is_identity() const { return a_.is_one() && b_.is_zero(); }

  friend bool operator==(const AffineMap& x, const AffineMap& y) { return x.a_ == y.a_ && x.b_ == y.b_; }

 private:
  ExactScalar a_;
  ExactScalar b_;
};

/// lambda o P o lambda^{-1}.
Polynomial affine_conjugate(const Polynomial& p, const AffineMap& lambda);

/// P(z + c).
Polynomial taylor_shift(const Polynomial& p, const ExactScalar& c);

/// The point -c_{n-1} / (n c_n) (mean of the roots); P(z + center) - center
/// has no z^{n-1} term when centered conjugation is used.
ExactScalar center_point(const Polynomial& p);

/// P normalized as a right compositional factor: monic with zero constant term.
Polynomial normalize_right_factor(const Polynomial& p);

struct FieldRoots {
  std::vector<std::pair<ExactScalar, int>> roots;  ///< (root, multiplicity), sorted
  bool complete = false;  ///< true iff the multiplicities sum to deg P
};

/// Roots of P lying in Q(i). Squarefree parts of degree <= 2 are solved
/// exactly; higher-degree parts use numerically located candidates that are
/// accepted only after exact verification.
FieldRoots field_roots(const Polynomial& p);

/// All w in Q(i) with w^k = x, sorted.
std::vector<ExactScalar> field_nth_roots(const ExactScalar& x, unsigned k);

struct CriticalData {
  Polynomial derivative;
  std::vector<ExactScalar> points;  ///< field critical points
  std::vector<ExactScalar> values;  ///< their images, deduplicated
  bool split = false;               ///< P' splits completely over Q(i)
};

CriticalData derivative_and_critical_data(const Polynomial& p);

/// Numeric roots of P (deg >= 1) via Aberth iteration.
std::vector<std::complex<long double>> numeric_roots(const Polynomial& p);

}  // namespace semiconj
