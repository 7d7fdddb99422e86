#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semiconj/polynomial.hpp"

namespace semiconj {

/// T_n, with T_n(cos t) = cos(n t).
Polynomial chebyshev(int n);

enum class SpecialKind { Power, ChebyshevPlus, ChebyshevMinus, NotSpecial, UndecidedField };

const char* to_string(SpecialKind kind);

struct SpecialClassification {
  SpecialKind kind = SpecialKind::NotSpecial;
  /// lambda with lambda^-1 o P o lambda = c z^n (power) or +-T_n (Chebyshev),
  /// when such a map exists over Q(i).
  std::optional<AffineMap> witness;
  /// The two-point set {a, b} with odd_part((P-a)(P-b)) = (z-a)(z-b).
  std::optional<std::pair<ExactScalar, ExactScalar>> K;

  bool is_special() const { return kind != SpecialKind::NotSpecial; }
};

SpecialClassification classify_special(const Polynomial& p);

struct SymmetryProfile {
  int ell = 1;
  ExactScalar center;
  /// Units eps in {1, -1, i, -i} with eps^ell = 1 and P~(eps z) = eps P~(z),
  /// P~ the centered form.
  std::vector<ExactScalar> field_units;
};

SymmetryProfile symmetry_order(const Polynomial& p);

/// lambda^-1 o P o lambda with lambda = z + center_point(P).
Polynomial centered_form(const Polynomial& p);

/// All affine mu over Q(i) with mu o P o mu^-1 = Q, sorted.
std::vector<AffineMap> affine_conjugacies(const Polynomial& p, const Polynomial& q);

/// Whether some complex affine mu has mu o P o mu^-1 = Q. Decided exactly.
bool conjugate_over_c(const Polynomial& p, const Polynomial& q);

}  // namespace semiconj
