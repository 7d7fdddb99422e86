#include "semiconj/semiconj_engine.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "semiconj/decompose.hpp"
#include "semiconj/errors.hpp"

namespace semiconj {

namespace {

struct CanonicalKey {
  int degree;
  std::string text;
  bool operator<(const CanonicalKey& o) const { return degree != o.degree ? degree < o.degree : text < o.text; }
};

CanonicalKey key_of(const Polynomial& p) { return {p.degree(), p.to_string()}; }

void require_non_special(const Polynomial& b, const char* op) {
  if (b.degree() < 2) raise(ErrorKind::InvalidParameters, std::string(op) + ": degree must be >= 2");
  const SpecialClassification c = classify_special(b);
  if (c.is_special()) {
    raise(ErrorKind::SpecialInput, std::string(op) + ": " + b.to_string() + " is " + to_string(c.kind));
  }
}

// Divisors of n^D in increasing order.
std::vector<long> divisors_of_power(int n, int D) {
  std::vector<std::pair<long, int>> primes;
  int rest = n;
  for (int p = 2; p * p <= rest; ++p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) primes.emplace_back(p, e * D);
  }
  if (rest > 1) primes.emplace_back(rest, D);
  std::vector<long> divs{1};
  for (const auto& [p, e] : primes) {
    std::vector<long> next;
    for (long d : divs) {
      long pk = 1;
      for (int k = 0; k <= e; ++k) {
        next.push_back(d * pk);
        pk *= p;
      }
    }
    divs = std::move(next);
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// Strips right factors B while the cofactor keeps degree >= 2, then
// normalizes; returns the witness for the reduced X.
SemiconjugacyWitness reduce_representative(Polynomial x, const Polynomial& b) {
  const int n = b.degree();
  x = normalize_right_factor(x);
  while (x.degree() > n && x.degree() % n == 0) {
    auto q = left_quotient(x, b);
    if (!q || q->degree() < 2) break;
    x = normalize_right_factor(*q);
  }
  auto w = solve_A(x, b);
  if (!w) raise(ErrorKind::ConsistencyFailure, "reduced representative lost its semiconjugacy");
  return *w;
}

}  // namespace

int iterate_depth_bound(int n) {
  if (n < 1) raise(ErrorKind::InvalidParameters, "degree must be >= 1");
  // smallest t with 2^t >= n^2, i.e. ceil(2 log2 n)
  const long long sq = static_cast<long long>(n) * n;
  int t = 0;
  while ((1LL << t) < sq) ++t;
  return t + 3;
}

long double universal_degree_bound(int n) {
  long double fact = 1;
  for (int k = 2; k < n; ++k) fact *= k;
  return fact * std::pow(static_cast<long double>(n), 2.0L * std::log2(static_cast<long double>(n)) + 3.0L);
}

SearchBudget SearchBudget::for_degree(int n, long degree_cap) {
  if (n < 2) raise(ErrorKind::InvalidParameters, "search budget needs degree >= 2");
  SearchBudget b;
  b.n = n;
  b.D = iterate_depth_bound(n);
  for (int l = 1; l < n; ++l) {
    if (std::gcd(l, n) == 1) b.Lset.push_back(l);
  }
  b.degree_cap = degree_cap;
  return b;
}

std::optional<SemiconjugacyWitness> solve_A(const Polynomial& x, const Polynomial& b) {
  if (x.degree() < 1) raise(ErrorKind::InvalidParameters, "solve_A: X must be nonconstant");
  if (b.degree() < 1) raise(ErrorKind::InvalidParameters, "solve_A: B must be nonconstant");
  auto a = left_quotient(compose(x, b), x);
  if (!a) return std::nullopt;
  return SemiconjugacyWitness{*a, x, b};
}

std::optional<SemiconjugacyWitness> solve_B(const Polynomial& a, const Polynomial& x) {
  if (x.degree() < 1) raise(ErrorKind::InvalidParameters, "solve_B: X must be nonconstant");
  if (a.degree() < 1) raise(ErrorKind::InvalidParameters, "solve_B: A must be nonconstant");
  auto b = right_quotient(compose(a, x), x);
  if (!b) return std::nullopt;
  return SemiconjugacyWitness{a, x, *b};
}

bool is_semiconjugacy(const Polynomial& a, const Polynomial& x, const Polynomial& b) {
  return compose(a, x) == compose(x, b);
}

std::vector<SemiconjugacyWitness> enumerate_E(const Polynomial& b, const SearchBudget& budget) {
  require_non_special(b, "enumerate_E");
  const int n = b.degree();
  std::map<CanonicalKey, SemiconjugacyWitness> found;
  found.emplace(key_of(Polynomial::z()), SemiconjugacyWitness{b, Polynomial::z(), b});

  std::vector<Polynomial> iterates{Polynomial::z()};
  auto iterate_of = [&](int d) -> const Polynomial& {
    while (static_cast<int>(iterates.size()) <= d) iterates.push_back(compose(b, iterates.back(), budget.degree_cap));
    return iterates[static_cast<std::size_t>(d)];
  };

  for (long deg_w : divisors_of_power(n, budget.D)) {
    if (deg_w % n == 0 && deg_w != n) continue;
    int d = 0;
    long npow = 1;
    while (npow % deg_w != 0) {
      npow *= n;
      ++d;
    }
    Polynomial w = Polynomial::z();
    if (deg_w > 1) {
      if (npow > budget.degree_cap) {
        raise(ErrorKind::BudgetExceeded, "iterate of degree " + std::to_string(npow) + " exceeds cap");
      }
      auto split = right_factor_of_degree(iterate_of(d), static_cast<int>(deg_w));
      if (!split) continue;
      w = split->right;
    }
    auto cw = solve_A(w, b);
    if (!cw) continue;
    const ExactScalar p = center_point(cw->A);
    for (int l : budget.Lset) {
      Polynomial x = w;
      if (l >= 2) {
        if (cw->A.evaluate(p) != p) continue;
        x = (w - Polynomial(p)).pow(static_cast<unsigned>(l));
      }
      if (!solve_A(x, b)) continue;
      SemiconjugacyWitness rep = reduce_representative(x, b);
      found.emplace(key_of(rep.X), std::move(rep));
    }
  }

  std::vector<SemiconjugacyWitness> out;
  out.reserve(found.size());
  for (auto& [key, wit] : found) {
    if (!is_semiconjugacy(wit.A, wit.X, wit.B)) raise(ErrorKind::ConsistencyFailure, "enumerated witness fails");
    if (classify_special(wit.A).is_special()) {
      raise(ErrorKind::ConsistencyFailure, "special target " + wit.A.to_string() + " for non-special B");
    }
    out.push_back(std::move(wit));
  }
  return out;
}

TargetedSearch enumerate_EAB(const Polynomial& a, const Polynomial& b, const SearchBudget& budget) {
  TargetedSearch out;
  if (a.degree() != b.degree()) return out;
  std::map<CanonicalKey, SemiconjugacyWitness> found;
  for (const auto& rep : enumerate_E(b, budget)) {
    auto mus = affine_conjugacies(rep.A, a);
    if (mus.empty()) {
      if (conjugate_over_c(rep.A, a)) out.complex_only = true;
      continue;
    }
    for (const auto& mu : mus) {
      Polynomial x = compose(mu.as_polynomial(), rep.X);
      found.emplace(key_of(x), SemiconjugacyWitness{a, x, b});
    }
  }
  for (auto& [key, wit] : found) out.witnesses.push_back(std::move(wit));
  return out;
}

MinimalFactorization factor_through_minimal(const Polynomial& a, const Polynomial& b,
                                            const std::vector<Polynomial>& witnesses) {
  require_non_special(a, "factor_through_minimal");
  require_non_special(b, "factor_through_minimal");
  if (witnesses.empty()) raise(ErrorKind::InvalidParameters, "factor_through_minimal: no witnesses");
  for (const auto& x : witnesses) {
    if (!is_semiconjugacy(a, x, b)) raise(ErrorKind::InvalidParameters, x.to_string() + " is not in E(A, B)");
  }
  MinimalFactorization out;
  out.X0 = *std::min_element(witnesses.begin(), witnesses.end(),
                             [](const Polynomial& x, const Polynomial& y) { return key_of(x) < key_of(y); });
  for (const auto& x : witnesses) {
    if (x.degree() % out.X0.degree() != 0) {
      raise(ErrorKind::ConsistencyFailure, "degree of " + x.to_string() + " is not a multiple of the minimum");
    }
    auto f = left_quotient(x, out.X0);
    if (!f || compose(*f, a) != compose(a, *f)) {
      raise(ErrorKind::ConsistencyFailure, x.to_string() + " does not factor through the minimal element");
    }
    out.factors.push_back(std::move(*f));
  }
  return out;
}

std::optional<CommutantElement> express_in_root(const Polynomial& y, const Polynomial& r) {
  if (r.degree() < 2 || y.degree() < 1) return std::nullopt;
  Polynomial cur = y;
  int m = 0;
  while (cur.degree() >= 2) {
    if (cur.degree() % r.degree() != 0) return std::nullopt;
    auto q = left_quotient(cur, r);
    if (!q) return std::nullopt;
    cur = std::move(*q);
    ++m;
  }
  if (cur.degree() != 1) return std::nullopt;
  return CommutantElement{y, AffineMap::from_polynomial(cur), m};
}

CommutantStructure commutant(const Polynomial& b, long degree_cap, const SearchBudget& budget) {
  require_non_special(b, "commutant");
  std::map<CanonicalKey, Polynomial> base;
  for (const auto& rep : enumerate_E(b, budget)) {
    for (const auto& mu : affine_conjugacies(rep.A, b)) {
      Polynomial y = compose(mu.as_polynomial(), rep.X);
      base.emplace(key_of(y), std::move(y));
    }
  }
  base.emplace(key_of(b), b);

  CommutantStructure out;
  // Minimal degree >= 2; monic elements preferred, then text.
  const Polynomial* best = nullptr;
  for (const auto& [key, y] : base) {
    if (y.degree() < 2) continue;
    if (best && best->degree() < y.degree()) break;
    if (!best || (!best->leading().is_one() && y.leading().is_one())) best = &y;
  }
  out.R = *best;
  out.symmetry = symmetry_order(out.R);
  out.symmetries = affine_conjugacies(out.R, out.R);
  auto bx = express_in_root(b, out.R);
  if (!bx) raise(ErrorKind::ConsistencyFailure, "B is not sigma o R^m for the minimal commuting R");
  out.b_sigma = bx->sigma;
  out.b_power = bx->power;

  std::map<CanonicalKey, CommutantElement> elements;
  for (const auto& [key, y0] : base) {
    Polynomial y = y0;
    for (;;) {
      if (y.degree() >= 2) {
        auto e = express_in_root(y, out.R);
        if (!e) raise(ErrorKind::ConsistencyFailure, y.to_string() + " is not sigma o R^m");
        elements.emplace(key_of(y), std::move(*e));
      } else {
        elements.emplace(key_of(y), CommutantElement{y, AffineMap::from_polynomial(y), 0});
      }
      if (static_cast<long>(y.degree()) * b.degree() > degree_cap) break;
      y = compose(y, b, degree_cap);
    }
  }
  for (auto& [key, e] : elements) out.elements.push_back(std::move(e));
  return out;
}

StripResult strip_iterate(const Polynomial& y, const Polynomial& x, const Polynomial& b, int s,
                          const SearchBudget& budget) {
  if (s < 0) raise(ErrorKind::InvalidParameters, "strip_iterate: s must be >= 0");
  require_non_special(b, "strip_iterate");
  if (compose(y, x) != iterate(b, static_cast<unsigned>(s), budget.degree_cap)) {
    raise(ErrorKind::NotAnIterateSplit, "Y o X differs from B^" + std::to_string(s));
  }
  const int n = b.degree();
  StripResult out{y, x, 0, 0, s};
  bool progress = true;
  while (progress && out.s > 0) {
    progress = false;
    if (out.X.degree() >= n && out.X.degree() % n == 0) {
      if (auto q = left_quotient(out.X, b)) {
        out.X = std::move(*q);
        ++out.j;
        --out.s;
        progress = true;
        continue;
      }
    }
    if (out.Y.degree() >= n) {
      const Polynomial rest = iterate(b, static_cast<unsigned>(out.s - 1), budget.degree_cap);
      if (out.X.degree() >= 1 && rest.degree() % out.X.degree() == 0) {
        auto q = left_quotient(rest, out.X);
        if (q && compose(b, *q) == out.Y) {
          out.Y = std::move(*q);
          ++out.i;
          --out.s;
          progress = true;
        }
      }
    }
  }
  if (out.s > budget.D) {
    raise(ErrorKind::BoundViolation,
          "stripped exponent " + std::to_string(out.s) + " exceeds " + std::to_string(budget.D));
  }
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

namespace {

// Y o X commutes with B; rewrite X so that Y o X~ is an iterate of B.
std::optional<EquivalenceCertificate> adjust_certificate(const Polynomial& a, const Polynomial& b,
                                                         const Polynomial& x, const Polynomial& y,
                                                         const SearchBudget& budget) {
  const Polynomial yx = compose(y, x, budget.degree_cap);
  const CommutantStructure comm = commutant(b, yx.degree(), budget);
  auto e1 = express_in_root(yx, comm.R);
  if (!e1) return std::nullopt;
  const int m1 = e1->power;
  const int m2 = comm.b_power;
  const AffineMap sigma3 = e1->sigma.inverse().then_after(comm.b_sigma.pow(static_cast<unsigned>(m1)));
  const Polynomial tail = iterate(comm.R, static_cast<unsigned>(m2 * m1 - m1), budget.degree_cap);
  const Polynomial x_adj = compose(x, compose(sigma3.as_polynomial(), tail), budget.degree_cap);
  if (!is_semiconjugacy(a, x_adj, b)) return std::nullopt;
  if (compose(y, x_adj, budget.degree_cap) != iterate(b, static_cast<unsigned>(m1), budget.degree_cap)) {
    return std::nullopt;
  }
  return EquivalenceCertificate{x_adj, y, m1};
}

}  // namespace

Equivalence are_equivalent(const Polynomial& a, const Polynomial& b, const SearchBudget& budget) {
  Equivalence out;
  if (a.degree() != b.degree()) {
    out.verdict = Verdict::False;
    out.reason = "degrees differ";
    return out;
  }
  if (a.degree() < 2) raise(ErrorKind::InvalidParameters, "are_equivalent: degree must be >= 2");

  auto conj = affine_conjugacies(b, a);
  if (!conj.empty()) {
    out.verdict = Verdict::True;
    out.conjugacy = conj.front();
    const Polynomial mu = conj.front().as_polynomial();
    out.certificate = EquivalenceCertificate{mu, conj.front().inverse().as_polynomial(), 0};
    out.reason = "affinely conjugate over Q(i)";
    return out;
  }
  if (conjugate_over_c(b, a)) {
    out.verdict = Verdict::True;
    out.reason = "affinely conjugate over C only";
    return out;
  }

  const SpecialClassification ca = classify_special(a);
  const SpecialClassification cb = classify_special(b);
  if (ca.kind == SpecialKind::UndecidedField || cb.kind == SpecialKind::UndecidedField) {
    out.verdict = Verdict::Undecided;
    out.reason = "special classification undecided over Q(i)";
    return out;
  }
  if (ca.is_special() || cb.is_special()) {
    // Special polynomials are equivalent only to conjugates, which were ruled out above.
    out.verdict = Verdict::False;
    out.reason = std::string("special: ") + to_string(ca.kind) + " vs " + to_string(cb.kind);
    return out;
  }

  try {
    const TargetedSearch fw = enumerate_EAB(a, b, budget);
    const TargetedSearch bw = enumerate_EAB(b, a, budget);
    const bool has_fw = !fw.witnesses.empty() || fw.complex_only;
    const bool has_bw = !bw.witnesses.empty() || bw.complex_only;
    if (!has_fw || !has_bw) {
      out.verdict = Verdict::False;
      out.reason = !has_fw ? "E(A, B) is empty" : "E(B, A) is empty";
      return out;
    }
    out.verdict = Verdict::True;
    out.reason = "semiconjugate in both directions";
    if (!fw.witnesses.empty() && !bw.witnesses.empty()) {
      try {
        out.certificate = adjust_certificate(a, b, fw.witnesses.front().X, bw.witnesses.front().X, budget);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
      }
      if (!out.certificate) out.reason += "; no iterate certificate within the degree cap";
    } else {
      out.reason += " (witnesses need coefficients outside Q(i))";
    }
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    out.verdict = Verdict::Undecided;
    out.reason = e.what();
  }
  return out;
}

UniversalPair universal_pair(const Polynomial& b, const SearchBudget& budget) {
  require_non_special(b, "universal_pair");
  const auto reps = enumerate_E(b, budget);
  UniversalPair out;
  out.X = Polynomial::z();
  for (const auto& rep : reps) {
    if (rep.X.degree() <= 1) continue;
    auto uv = join_pair(out.X, rep.X);
    if (!uv) raise(ErrorKind::ConsistencyFailure, "no join of " + out.X.to_string() + " and " + rep.X.to_string());
    out.X = compose(uv->first, out.X, budget.degree_cap);
  }
  auto a = solve_A(out.X, b);
  if (!a) raise(ErrorKind::ConsistencyFailure, "universal X is not a semiconjugacy");
  out.A = a->A;
  for (const auto& rep : reps) {
    auto u = left_quotient(out.X, rep.X);
    if (!u) raise(ErrorKind::ConsistencyFailure, rep.X.to_string() + " is not a right factor of X");
    if (!is_semiconjugacy(rep.A, rep.X, b) || compose(out.A, *u) != compose(*u, rep.A)) {
      raise(ErrorKind::ConsistencyFailure, "registry diagram fails for " + rep.X.to_string());
    }
    out.registry.push_back({rep.A, rep.X, *u});
  }
  out.bound = universal_degree_bound(b.degree());
  if (static_cast<long double>(out.X.degree()) > out.bound * (1.0L + 1e-12L)) {
    raise(ErrorKind::BoundViolation, "deg X = " + std::to_string(out.X.degree()) + " exceeds the universal bound");
  }
  return out;
}

}  // namespace semiconj
