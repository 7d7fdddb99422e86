#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiconj/polynomial.hpp"
#include "semiconj/special_forms.hpp"

namespace semiconj {

/// A verified triple with A o X = X o B.
struct SemiconjugacyWitness {
  Polynomial A;
  Polynomial X;
  Polynomial B;
};

/// ceil(2 log2 n) + 3, computed exactly.
int iterate_depth_bound(int n);

/// (n-1)! n^(2 log2 n + 3): the degree bound for the universal semiconjugacy.
long double universal_degree_bound(int n);

struct SearchBudget {
  int n = 2;
  int D = 5;              ///< iterate depth bound
  std::vector<int> Lset;  ///< 1 <= l < n with gcd(l, n) = 1
  long degree_cap = kDefaultDegreeCap;

  static SearchBudget for_degree(int n, long degree_cap = kDefaultDegreeCap);
};

/// A with A o X = X o B, if it exists.
std::optional<SemiconjugacyWitness> solve_A(const Polynomial& x, const Polynomial& b);

/// B with A o X = X o B over Q(i). Throws FieldObstruction when only a
/// complex solution exists.
std::optional<SemiconjugacyWitness> solve_B(const Polynomial& a, const Polynomial& x);

bool is_semiconjugacy(const Polynomial& a, const Polynomial& x, const Polynomial& b);

/// Representatives of E(B) for non-special B: every X with some A o X = X o B
/// is mu o X' o B^j for a listed X' and affine mu. Listed X are monic with
/// zero constant term, and carry no right factor B unless the cofactor is
/// affine. Sorted by degree, then text.
std::vector<SemiconjugacyWitness> enumerate_E(const Polynomial& b, const SearchBudget& budget);

struct TargetedSearch {
  std::vector<SemiconjugacyWitness> witnesses;  ///< elements of E(A, B) over Q(i)
  bool complex_only = false;  ///< some representative reaches A only via a non-Q(i) conjugacy
};

/// Representatives of E(A, B): for each X in enumerate_E(B) whose target is
/// conjugate to A, the conjugated X.
TargetedSearch enumerate_EAB(const Polynomial& a, const Polynomial& b, const SearchBudget& budget);

struct MinimalFactorization {
  Polynomial X0;
  std::vector<Polynomial> factors;  ///< factors[i] o X0 = witnesses[i], each commuting with A
};

MinimalFactorization factor_through_minimal(const Polynomial& a, const Polynomial& b,
                                            const std::vector<Polynomial>& witnesses);

struct CommutantElement {
  Polynomial Y;
  AffineMap sigma;
  int power = 0;  ///< Y = sigma o R^power
};

struct CommutantStructure {
  Polynomial R;
  SymmetryProfile symmetry;
  std::vector<AffineMap> symmetries;  ///< affine maps commuting with R
  AffineMap b_sigma;
  int b_power = 1;  ///< B = b_sigma o R^b_power
  std::vector<CommutantElement> elements;
};

/// Polynomials commuting with non-special B, up to degree_cap.
CommutantStructure commutant(const Polynomial& b, long degree_cap, const SearchBudget& budget);

/// Expresses Y as sigma o R^m, or nullopt.
std::optional<CommutantElement> express_in_root(const Polynomial& y, const Polynomial& r);

struct StripResult {
  Polynomial Y;
  Polynomial X;
  int i = 0;  ///< left factors B removed from Y
  int j = 0;  ///< right factors B removed from X
  int s = 0;  ///< remaining exponent: Y o X = B^s
};

StripResult strip_iterate(const Polynomial& y, const Polynomial& x, const Polynomial& b, int s,
                          const SearchBudget& budget);

enum class Verdict { True, False, Undecided };

const char* to_string(Verdict v);

struct EquivalenceCertificate {
  Polynomial X;  ///< A o X = X o B
  Polynomial Y;  ///< B o Y = Y o A
  int d = 0;     ///< Y o X = B^d
};

struct Equivalence {
  Verdict verdict = Verdict::Undecided;
  std::optional<AffineMap> conjugacy;  ///< mu with mu o B o mu^-1 = A
  std::optional<EquivalenceCertificate> certificate;
  std::string reason;
};

Equivalence are_equivalent(const Polynomial& a, const Polynomial& b, const SearchBudget& budget);

struct RegistryEntry {
  Polynomial C;
  Polynomial X_C;
  Polynomial U_C;
};

struct UniversalPair {
  Polynomial A;
  Polynomial X;
  std::vector<RegistryEntry> registry;
  long double bound = 0;
};

UniversalPair universal_pair(const Polynomial& b, const SearchBudget& budget);

}  // namespace semiconj
