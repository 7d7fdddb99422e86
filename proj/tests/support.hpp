#pragma once

// Test-side generators and oracles. The oracles deliberately avoid the
// library's own algorithms: composition is expanded by powers, quotients are
// found by dense elimination or coefficient probing, and Chebyshev
// polynomials come from their closed-form sum.

#include <cmath>
#include <complex>
#include <optional>
#include <random>
#include <vector>

#include "semiconj/polynomial.hpp"
#include "semiconj/special_forms.hpp"

namespace testing_support {

using semiconj::AffineMap;
using semiconj::ExactScalar;
using semiconj::Polynomial;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  ExactScalar rational(long range = 3, long max_den = 2) {
    return ExactScalar(mpq_class(integer(-range, range), integer(1, max_den)));
  }

  ExactScalar gaussian(long range = 3, long max_den = 2) {
    ExactScalar re = rational(range, max_den);
    if (coin()) return re;
    return re + rational(range, max_den) * ExactScalar::i();
  }

  ExactScalar nonzero(long range = 3, long max_den = 2, bool gaussian_ok = true) {
    for (;;) {
      ExactScalar c = gaussian_ok ? gaussian(range, max_den) : rational(range, max_den);
      if (!c.is_zero()) return c;
    }
  }

  Polynomial poly(int degree, long range = 3, long max_den = 2, bool gaussian_ok = true) {
    std::vector<ExactScalar> c(static_cast<std::size_t>(degree) + 1);
    for (int k = 0; k < degree; ++k) c[static_cast<std::size_t>(k)] = gaussian_ok ? gaussian(range, max_den) : rational(range, max_den);
    c[static_cast<std::size_t>(degree)] = nonzero(range, max_den, gaussian_ok);
    return Polynomial(std::move(c));
  }

  AffineMap affine(long range = 3, long max_den = 2, bool gaussian_ok = true) {
    return AffineMap(nonzero(range, max_den, gaussian_ok), gaussian_ok ? gaussian(range, max_den) : rational(range, max_den));
  }

  std::complex<double> point(double radius) {
    std::uniform_real_distribution<double> u(-radius, radius);
    return {u(rng_), u(rng_)};
  }

 private:
  std::mt19937_64 rng_;
};

/// sum p_k Q^k by repeated multiplication.
inline Polynomial compose_by_powers(const Polynomial& p, const Polynomial& q) {
  Polynomial acc;
  Polynomial power(1);
  for (const auto& c : p.coeffs()) {
    acc += power * c;
    power = power * q;
  }
  return acc;
}

/// Unique solution of a square or overdetermined system, or nullopt when it
/// is inconsistent or underdetermined.
inline std::optional<std::vector<ExactScalar>> solve_dense(std::vector<std::vector<ExactScalar>> a,
                                                           std::vector<ExactScalar> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c].is_zero()) ++piv;
    if (piv == rows) return std::nullopt;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    const ExactScalar inv = ExactScalar(1) / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const ExactScalar f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < cols) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<ExactScalar> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

/// G with G o H = P via the linear system sum g_i [z^k] H^i = p_k.
inline std::optional<Polynomial> left_quotient_oracle(const Polynomial& p, const Polynomial& h) {
  const int n = p.degree();
  const int d = h.degree();
  if (n % d != 0) return std::nullopt;
  const int r = n / d;
  std::vector<Polynomial> powers{Polynomial(1)};
  for (int i = 1; i <= r; ++i) powers.push_back(powers.back() * h);
  std::vector<std::vector<ExactScalar>> a(static_cast<std::size_t>(n) + 1,
                                          std::vector<ExactScalar>(static_cast<std::size_t>(r) + 1));
  std::vector<ExactScalar> b(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= r; ++i) a[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i)].coeff(static_cast<std::size_t>(k));
    b[static_cast<std::size_t>(k)] = p.coeff(static_cast<std::size_t>(k));
  }
  auto x = solve_dense(std::move(a), std::move(b));
  if (!x) return std::nullopt;
  return Polynomial(std::move(*x));
}

/// Best rational approximation with denominator <= max_den.
inline mpq_class rationalize(long double v, long max_den) {
  long double x = v;
  mpz_class h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  for (int it = 0; it < 40; ++it) {
    const long double a = std::floor(x);
    const mpz_class ai(static_cast<long>(a));
    mpz_class h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const long double frac = x - a;
    if (std::fabs(frac) < 1e-15L) break;
    x = 1 / frac;
  }
  mpq_class q(h1, k1);
  q.canonicalize();
  return q;
}

/// r-th roots of x lying in Q(i), found numerically and confirmed exactly,
/// ordered by angular distance from the principal root.
inline std::vector<ExactScalar> field_roots_numeric(const ExactScalar& x, int r) {
  const std::complex<long double> c = x.to_complex_ld();
  const long double mag = std::pow(std::abs(c), 1.0L / r);
  const long double pi2 = 2 * std::acos(-1.0L);
  std::vector<ExactScalar> out;
  for (int k = 0; k < r; ++k) {
    const std::complex<long double> w = std::polar(mag, (std::arg(c) + pi2 * k) / r);
    const ExactScalar cand(rationalize(w.real(), 100000), rationalize(w.imag(), 100000));
    if (cand.pow(static_cast<unsigned long>(r)) == x) out.push_back(cand);
  }
  return out;  // k = 0 is the principal root, then increasing angle
}

/// All H over Q(i) with G o H = P, found by fixing the leading coefficient
/// and probing one unknown coefficient at a time (the coefficient of
/// z^(n-k) in G o H is affine in h_(d-k) once the higher ones are fixed).
/// Solutions are listed in principal-root order of the leading coefficient.
inline std::vector<Polynomial> right_quotients_oracle(const Polynomial& p, const Polynomial& g) {
  const int n = p.degree();
  const int r = g.degree();
  std::vector<Polynomial> out;
  if (r < 1 || n % r != 0) return out;
  const int d = n / r;
  if (r == 1) {
    out.push_back((p - Polynomial(g.constant_term())) / g.leading());
    return out;
  }
  for (const ExactScalar& lead : field_roots_numeric(p.leading() / g.leading(), r)) {
    std::vector<ExactScalar> h(static_cast<std::size_t>(d) + 1);
    h[static_cast<std::size_t>(d)] = lead;
    bool ok = true;
    for (int k = 1; k <= d && ok; ++k) {
      const std::size_t idx = static_cast<std::size_t>(d - k);
      const std::size_t target = static_cast<std::size_t>(n - k);
      h[idx] = ExactScalar(0);
      const ExactScalar v0 = compose_by_powers(g, Polynomial(h)).coeff(target);
      h[idx] = ExactScalar(1);
      const ExactScalar v1 = compose_by_powers(g, Polynomial(h)).coeff(target);
      const ExactScalar slope = v1 - v0;
      if (slope.is_zero()) {
        ok = false;
        break;
      }
      h[idx] = (p.coeff(target) - v0) / slope;
    }
    if (!ok) continue;
    Polynomial cand(h);
    if (compose_by_powers(g, cand) == p) out.push_back(cand);
  }
  return out;
}

/// T_n from its closed form: n/2 sum_k (-1)^k (n-k-1)! / (k! (n-2k)!) (2z)^(n-2k).
inline Polynomial chebyshev_closed_form(int n) {
  if (n == 0) return Polynomial(1);
  std::vector<ExactScalar> c(static_cast<std::size_t>(n) + 1);
  auto fact = [](int m) {
    mpz_class f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  for (int k = 0; 2 * k <= n; ++k) {
    mpz_class two_pow = 1;
    two_pow <<= static_cast<unsigned>(n - 2 * k);
    mpq_class v(mpz_class(n) * fact(n - k - 1) * two_pow, 2 * fact(k) * fact(n - 2 * k));
    v.canonicalize();
    if (k % 2 == 1) v = -v;
    c[static_cast<std::size_t>(n - 2 * k)] = ExactScalar(v);
  }
  return Polynomial(std::move(c));
}

inline Polynomial z() { return Polynomial::z(); }

inline Polynomial P(std::initializer_list<long> ascending) {
  std::vector<ExactScalar> c;
  for (long v : ascending) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace testing_support
