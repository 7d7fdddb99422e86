#pragma once

#include <gmpxx.h>

#include <complex>
#include <iosfwd>
#include <string>

namespace semiconj {

/// Exact element of the Gaussian rationals Q(i). Both parts are kept in
/// canonical (reduced, positive denominator) form by GMP.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(mpq_class re, mpq_class im = 0) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }
  ExactScalar(long num, long den) : re_(num, den) { re_.canonicalize(); }

  static ExactScalar i() { return ExactScalar(mpq_class(0), mpq_class(1)); }

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  ExactScalar conj() const { return ExactScalar(re_, -im_); }
  /// |x|^2 as an exact rational.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::complex<long double> to_complex_ld() const;

  ExactScalar& operator+=(const ExactScalar& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  ExactScalar& operator-=(const ExactScalar& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);

  friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
  friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
  friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
  friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }
  ExactScalar operator-() const { return ExactScalar(-re_, -im_); }

  friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

  /// Total order (real part, then imaginary part); only used to make
  /// set-valued results deterministic.
  friend bool lex_less(const ExactScalar& a, const ExactScalar& b) {
    int c = cmp(a.re_, b.re_);
    return c < 0 || (c == 0 && cmp(a.im_, b.im_) < 0);
  }

  ExactScalar pow(unsigned long k) const;

  /// Canonical text: `p/q`, or `(p/q+r/s*i)` when the imaginary part is nonzero.
  std::string to_string() const;

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

bool lex_less(const ExactScalar& a, const ExactScalar& b);
std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

/// Exact square root of a nonnegative rational, if it is rational.
bool rational_sqrt(const mpq_class& q, mpq_class& out);

}  // namespace semiconj
