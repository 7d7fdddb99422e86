#include "semiconj/poly_io.hpp"

#include <cctype>
#include <limits>

#include "semiconj/errors.hpp"

namespace semiconj {

namespace {

// Recursive-descent parser over expressions in up to two variables. Values
// are BivariatePoly; `primary` maps to the x slot and `secondary` (if any)
// to the y slot.
class Parser {
 public:
  Parser(std::string_view text, char primary, char secondary)
      : text_(text), primary_(primary), secondary_(secondary) {}

  BivariatePoly parse_all() {
    BivariatePoly v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    raise(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' || c == 'i' || c == primary_ ||
           (secondary_ != '\0' && c == secondary_);
  }

  BivariatePoly expr() {
    BivariatePoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BivariatePoly term() {
    BivariatePoly acc = unary();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * unary();
      } else if (c == '/') {
        ++pos_;
        BivariatePoly d = unary();
        if (d.degree_y() > 0 || d.degree_x() > 0) fail("division by a non-constant");
        ExactScalar s = d.coeff(0, 0);
        if (s.is_zero()) fail("division by zero");
        acc = acc * (ExactScalar(1) / s);
      } else if (starts_factor(c)) {
        acc = acc * unary();  // implicit multiplication, e.g. 2z
      } else {
        return acc;
      }
    }
  }

  BivariatePoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return unary() * ExactScalar(-1);
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BivariatePoly power() {
    BivariatePoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_ || (pos_ < text_.size() && text_[pos_] == '.')) fail("expected a nonnegative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 1000000UL) fail("exponent too large");
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  BivariatePoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      BivariatePoly v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == 'i') {
      ++pos_;
      return BivariatePoly::in_x(Polynomial(ExactScalar::i()));
    }
    if (c == primary_) {
      ++pos_;
      return BivariatePoly::in_x(Polynomial::z());
    }
    if (secondary_ != '\0' && c == secondary_) {
      ++pos_;
      return BivariatePoly::in_y(Polynomial::z());
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  BivariatePoly number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string int_part(text_.substr(start, pos_ - start));
    std::string frac_part;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::size_t fs = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      frac_part = std::string(text_.substr(fs, pos_ - fs));
    }
    if (int_part.empty() && frac_part.empty()) fail("malformed number");
    mpz_class num(int_part + frac_part, 10);
    mpz_class den = 1;
    for (std::size_t k = 0; k < frac_part.size(); ++k) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return BivariatePoly::in_x(Polynomial(ExactScalar(q)));
  }

  std::string_view text_;
  char primary_;
  char secondary_;
  std::size_t pos_ = 0;
};

nlohmann::json integer_to_json(const mpz_class& v) {
  if (v.fits_slong_p()) return static_cast<long long>(v.get_si());
  return v.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
  if (j.is_string()) {
    mpz_class v;
    if (v.set_str(j.get<std::string>(), 10) != 0) raise(ErrorKind::ParseError, "bad integer string in JSON");
    return v;
  }
  raise(ErrorKind::ParseError, "expected an integer in JSON coefficient");
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, char var) {
  BivariatePoly b = Parser(text, var, '\0').parse_all();
  return b.y_coeff(0);
}

BivariatePoly parse_bivariate(std::string_view text) { return Parser(text, 'x', 'y').parse_all(); }

BivariatePoly parse_curve(std::string_view text) {
  auto eq = text.find('=');
  BivariatePoly lhs = parse_bivariate(text.substr(0, eq));
  if (eq != std::string_view::npos) lhs -= parse_bivariate(text.substr(eq + 1));
  if (!lhs.is_separated()) raise(ErrorKind::MalformedCurve, "curve is not of the form u(x) - v(y)");
  return lhs;
}

std::string curve_to_string(const Polynomial& u, const Polynomial& v) {
  return u.to_string('x') + " - (" + v.to_string('y') + ") = 0";
}

nlohmann::json scalar_to_json(const ExactScalar& x) {
  return nlohmann::json::array({integer_to_json(x.re().get_num()), integer_to_json(x.re().get_den()),
                                integer_to_json(x.im().get_num()), integer_to_json(x.im().get_den())});
}

nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
  return {{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    raise(ErrorKind::ParseError, "expected {\"coeffs\": [...]}");
  }
  std::vector<ExactScalar> cs;
  for (const auto& c : j["coeffs"]) {
    if (!c.is_array() || c.size() != 4) raise(ErrorKind::ParseError, "coefficient must have 4 integers");
    mpz_class rd = integer_from_json(c[1]);
    mpz_class id = integer_from_json(c[3]);
    if (rd == 0 || id == 0) raise(ErrorKind::ParseError, "zero denominator in JSON coefficient");
    mpq_class re(integer_from_json(c[0]), rd);
    mpq_class im(integer_from_json(c[2]), id);
    re.canonicalize();
    im.canonicalize();
    cs.emplace_back(re, im);
  }
  return Polynomial(std::move(cs));
}

}  // namespace semiconj
