#include "semiconj/scalar.hpp"

#include "semiconj/errors.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

namespace semiconj {

std::complex<long double> ExactScalar::to_complex_ld() const {
  // mpq -> long double via mpf keeps more bits than get_d for large heights.
  auto conv = [](const mpq_class& q) -> long double {
    if (sgn(q) == 0) return 0.0L;
    mpf_class f(q, 128);
    long exp = 0;
    double mant = mpf_get_d_2exp(&exp, f.get_mpf_t());
    // refine with the residual to recover long double precision
    mpf_class hi(mant, 128);
    mpf_mul_2exp(hi.get_mpf_t(), hi.get_mpf_t(), static_cast<mp_bitcnt_t>(exp > 0 ? exp : 0));
    if (exp < 0) mpf_div_2exp(hi.get_mpf_t(), hi.get_mpf_t(), static_cast<mp_bitcnt_t>(-exp));
    mpf_class lo = f - hi;
    long double result = static_cast<long double>(mpf_get_d(hi.get_mpf_t())) +
                         static_cast<long double>(mpf_get_d(lo.get_mpf_t()));
    return result;
  };
  return {conv(re_), conv(im_)};
}

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::InvalidParameters, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  mpq_class n = o.norm();
  mpq_class r = (re_ * o.re_ + im_ * o.im_) / n;
  mpq_class m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

ExactScalar ExactScalar::pow(unsigned long k) const {
  ExactScalar result(1);
  ExactScalar base = *this;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

std::string ExactScalar::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string out = "(";
  if (sgn(re_) != 0) out += re_.get_str();
  if (sgn(im_) < 0) {
    out += "-";
  } else if (sgn(re_) != 0) {
    out += "+";
  }
  mpq_class mag = abs(im_);
  if (mag != 1) out += mag.get_str() + "*";
  out += "i)";
  return out;
}

std::ostream& operator<<(std::ostream& os, const ExactScalar& x) { return os << x.to_string(); }

bool rational_sqrt(const mpq_class& q, mpq_class& out) {
  if (sgn(q) < 0) return false;
  mpz_class n = q.get_num();
  mpz_class d = q.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  out = mpq_class(rn, rd);
  out.canonicalize();
  return true;
}

}  // namespace semiconj
