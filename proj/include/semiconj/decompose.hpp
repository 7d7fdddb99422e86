#pragma once

#include <optional>
#include <utility>

#include "semiconj/polynomial.hpp"

namespace semiconj {

/// A split P = left o right.
struct FactorPair {
  Polynomial left;
  Polynomial right;
};

/// G with G o H = P, or nullopt. Throws DegreeMismatch unless deg H divides deg P.
std::optional<Polynomial> left_quotient(const Polynomial& p, const Polynomial& h);

enum class QuotientStatus { Found, Absent, FieldObstruction };

struct RightQuotient {
  QuotientStatus status = QuotientStatus::Absent;
  Polynomial value;  ///< meaningful only when status == Found
};

/// H with G o H = P, searched over Q(i). When no Q(i) solution exists but a
/// complex one does, the status is FieldObstruction.
RightQuotient try_right_quotient(const Polynomial& p, const Polynomial& g);

/// Throwing form of try_right_quotient: FieldObstruction becomes an Error.
std::optional<Polynomial> right_quotient(const Polynomial& p, const Polynomial& g);

/// The monic, zero-constant right factor of degree d: P = left o right with
/// right = z^d + ... + c_1 z. Right factors of a fixed degree are unique up
/// to a left affine map, so this representative is canonical.
std::optional<FactorPair> right_factor_of_degree(const Polynomial& p, int d);

/// The leading part z^d + ... + c_1 z of a compositional d-th root of P,
/// obtained from a power-series root of the reversed polynomial. Used as
/// the candidate checked by right_factor_of_degree.
Polynomial approximate_right_factor(const Polynomial& p, int d);

struct EngstromReduction {
  Polynomial U, A_tilde, D_tilde, C_tilde, B_tilde, V;
};

/// For A o C = D o B, returns U, V and the reduced tuple with A = U o A~,
/// D = U o D~, C = C~ o V, B = B~ o V and A~ o C~ = D~ o B~, where
/// deg U = gcd(deg A, deg D) and deg V = gcd(deg C, deg B).
EngstromReduction engstrom_reduce(const Polynomial& a, const Polynomial& c, const Polynomial& d,
                                  const Polynomial& b);

enum class RittFamily { Power, Chebyshev };

/// Parameters of one Ritt move. Power family:
///   A = nu o z^s R(z)^n o sigma1^-1,  C = sigma1 o z^n o mu,
///   D = nu o z^n o sigma2^-1,         B = sigma2 o z^s R(z^n) o mu.
/// Chebyshev family: the same dressing around T_m (outer A, inner B) and T_n.
struct RittMoveForm {
  RittFamily family = RittFamily::Power;
  int s = 1;
  int n = 2;
  Polynomial R = Polynomial(1);
  int m = 1;
  AffineMap sigma1, sigma2, mu, nu;
};

struct RittMove {
  RittMoveForm form;  ///< the form actually materialized
  FactorPair first;   ///< (A, C)
  FactorPair second;  ///< (D, B)
  Polynomial composite;
};

/// Materializes both sides of a Ritt move. A Chebyshev form with n = 2 is
/// rewritten in the power family. Throws InvalidParameters on a
/// coprimality violation.
RittMove ritt_move(const RittMoveForm& form);

/// (u, v) with u o pi = v o rho, deg u = L / deg pi, deg v = L / deg rho,
/// L = lcm(deg pi, deg rho); u is monic with zero constant term.
std::optional<std::pair<Polynomial, Polynomial>> join_pair(const Polynomial& pi, const Polynomial& rho);

struct JoinMeet {
  Polynomial X, W, U1, U2, V1, V2;
};

/// Join and meet of two elements X1, X2 of E(B) for non-special B:
/// X = U1 o X1 = U2 o X2 with deg X = lcm, X1 = V1 o W, X2 = V2 o W with
/// deg W = gcd.
JoinMeet join_meet(const Polynomial& x1, const Polynomial& x2, const Polynomial& b);

}  // namespace semiconj
