#pragma once

#include <string>
#include <utility>
#include <vector>

#include "semiconj/polynomial.hpp"

namespace semiconj {

/// Dense polynomial in x and y over Q(i), stored as a polynomial in y whose
/// coefficients are polynomials in x: entry (i, j) is the coefficient of x^i y^j.
class BivariatePoly {
 public:
  BivariatePoly() = default;
  explicit BivariatePoly(std::vector<Polynomial> y_coeffs) : rows_(std::move(y_coeffs)) { trim(); }

  static BivariatePoly in_x(const Polynomial& p) { return BivariatePoly({p}); }
  static BivariatePoly in_y(const Polynomial& p);
  /// u(x) - v(y).
  static BivariatePoly separated(const Polynomial& u, const Polynomial& v);

  bool is_zero() const { return rows_.empty(); }
  int degree_y() const { return static_cast<int>(rows_.size()) - 1; }
  int degree_x() const;
  ExactScalar coeff(std::size_t i, std::size_t j) const;
  /// Coefficient of y^j as a polynomial in x.
  const Polynomial& y_coeff(std::size_t j) const;

  /// True iff no monomial mixes x and y.
  bool is_separated() const;
  /// Splits a separated polynomial into (u, v) with self = u(x) - v(y); the
  /// constant term is assigned to u. Throws MalformedCurve otherwise.
  std::pair<Polynomial, Polynomial> separate() const;

  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  BivariatePoly operator*(const ExactScalar& c) const;
  BivariatePoly pow(unsigned k) const;
  friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) { return a.rows_ == b.rows_; }

  /// Division with y as main variable. The divisor's leading y-coefficient
  /// must be a nonzero constant, so the division is exact over Q(i)[x].
  std::pair<BivariatePoly, BivariatePoly> divmod_y(const BivariatePoly& divisor) const;
  /// Same with x as main variable (leading x-coefficient must be constant).
  std::pair<BivariatePoly, BivariatePoly> divmod_x(const BivariatePoly& divisor) const;

  BivariatePoly swapped() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Polynomial> rows_;
};

}  // namespace semiconj
