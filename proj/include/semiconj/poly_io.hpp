#pragma once

#include <string>
#include <string_view>

#include "json.hpp"

#include "semiconj/bivariate.hpp"
#include "semiconj/polynomial.hpp"

namespace semiconj {

/// Parses polynomial text in `var`: sums of terms such as `c*z^k`, with
/// `+ - * ^`, parentheses, rational or decimal constants, `/` by a nonzero
/// constant, and `i` for the imaginary unit. Input like `(z-1)^2` is accepted;
/// the canonical printer (Polynomial::to_string) emits descending powers.
/// Throws Error(ParseError) on malformed input.
Polynomial parse_polynomial(std::string_view text, char var = 'z');

/// Parses an expression in x and y.
BivariatePoly parse_bivariate(std::string_view text);

/// Parses `u(x) - v(y) = 0` (the `= 0` is optional; `lhs = rhs` is read as
/// lhs - rhs). The result must be separated.
BivariatePoly parse_curve(std::string_view text);

/// Canonical curve text `u(x) - v(y) = 0`.
std::string curve_to_string(const Polynomial& u, const Polynomial& v);

/// {"coeffs": [[re_num, re_den, im_num, im_den], ...]} in ascending order.
/// Integers that do not fit in 64 bits are emitted as decimal strings.
nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);
nlohmann::json scalar_to_json(const ExactScalar& x);

}  // namespace semiconj
