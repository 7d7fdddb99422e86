#include "semiconj/bivariate.hpp"

#include <algorithm>
#include <stdexcept>

#include "semiconj/errors.hpp"

namespace semiconj {

BivariatePoly BivariatePoly::in_y(const Polynomial& p) {
  std::vector<Polynomial> rows;
  rows.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) rows.emplace_back(c);
  return BivariatePoly(std::move(rows));
}

BivariatePoly BivariatePoly::separated(const Polynomial& u, const Polynomial& v) {
  return in_x(u) - in_y(v);
}

void BivariatePoly::trim() {
  while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

int BivariatePoly::degree_x() const {
  int d = Polynomial::kZeroDegree;
  for (const auto& r : rows_) d = std::max(d, r.degree());
  return d;
}

ExactScalar BivariatePoly::coeff(std::size_t i, std::size_t j) const {
  return j < rows_.size() ? rows_[j].coeff(i) : ExactScalar(0);
}

const Polynomial& BivariatePoly::y_coeff(std::size_t j) const {
  static const Polynomial kZero;
  return j < rows_.size() ? rows_[j] : kZero;
}

bool BivariatePoly::is_separated() const {
  for (std::size_t j = 1; j < rows_.size(); ++j) {
    if (rows_[j].degree() > 0) return false;
  }
  return true;
}

std::pair<Polynomial, Polynomial> BivariatePoly::separate() const {
  if (!is_separated()) raise(ErrorKind::MalformedCurve, "curve is not of the form u(x) - v(y)");
  Polynomial u = y_coeff(0);
  std::vector<ExactScalar> v(rows_.size());
  for (std::size_t j = 1; j < rows_.size(); ++j) v[j] = -rows_[j].constant_term();
  return {u, Polynomial(std::move(v))};
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] += o.rows_[j];
  trim();
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  if (o.rows_.size() > rows_.size()) rows_.resize(o.rows_.size());
  for (std::size_t j = 0; j < o.rows_.size(); ++j) rows_[j] -= o.rows_[j];
  trim();
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Polynomial> out(a.rows_.size() + b.rows_.size() - 1);
  for (std::size_t i = 0; i < a.rows_.size(); ++i) {
    if (a.rows_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.rows_.size(); ++j) out[i + j] += a.rows_[i] * b.rows_[j];
  }
  return BivariatePoly(std::move(out));
}

BivariatePoly BivariatePoly::operator*(const ExactScalar& c) const {
  BivariatePoly r = *this;
  for (auto& row : r.rows_) row *= c;
  r.trim();
  return r;
}

BivariatePoly BivariatePoly::pow(unsigned k) const {
  BivariatePoly acc = in_x(Polynomial(1));
  for (unsigned i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

std::pair<BivariatePoly, BivariatePoly> BivariatePoly::divmod_y(const BivariatePoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("bivariate division by zero");
  const Polynomial& lead = divisor.rows_.back();
  if (lead.degree() != 0) throw std::invalid_argument("divmod_y: leading y-coefficient must be constant");
  const ExactScalar inv = ExactScalar(1) / lead.constant_term();
  const int dd = divisor.degree_y();
  std::vector<Polynomial> rem = rows_;
  if (degree_y() < dd) return {BivariatePoly(), *this};
  std::vector<Polynomial> quot(static_cast<std::size_t>(degree_y() - dd) + 1);
  for (int k = degree_y() - dd; k >= 0; --k) {
    Polynomial q = rem[static_cast<std::size_t>(k + dd)] * inv;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * divisor.rows_[static_cast<std::size_t>(j)];
    }
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {BivariatePoly(std::move(quot)), BivariatePoly(std::move(rem))};
}

BivariatePoly BivariatePoly::swapped() const {
  const int dx = degree_x();
  if (dx < 0) return {};
  std::vector<std::vector<ExactScalar>> cols(static_cast<std::size_t>(dx) + 1,
                                             std::vector<ExactScalar>(rows_.size()));
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const auto& cs = rows_[j].coeffs();
    for (std::size_t i = 0; i < cs.size(); ++i) cols[i][j] = cs[i];
  }
  std::vector<Polynomial> out;
  out.reserve(cols.size());
  for (auto& c : cols) out.emplace_back(std::move(c));
  return BivariatePoly(std::move(out));
}

std::pair<BivariatePoly, BivariatePoly> BivariatePoly::divmod_x(const BivariatePoly& divisor) const {
  auto [q, r] = swapped().divmod_y(divisor.swapped());
  return {q.swapped(), r.swapped()};
}

std::string BivariatePoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int j = degree_y(); j >= 0; --j) {
    const Polynomial& row = rows_[static_cast<std::size_t>(j)];
    if (row.is_zero()) continue;
    std::string ypart;
    if (j >= 1) ypart = j == 1 ? "y" : "y^" + std::to_string(j);
    if (!first) out += " + ";
    if (j == 0) {
      out += first ? row.to_string('x') : "(" + row.to_string('x') + ")";
    } else if (row == Polynomial(1)) {
      out += ypart;
    } else {
      out += "(" + row.to_string('x') + ")*" + ypart;
    }
    first = false;
  }
  return out;
}

}  // namespace semiconj
