#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cluster/integer.hpp"
#include "cluster/permutation.hpp"

namespace cluster {

/// Exponent tuple of a Laurent monomial; negative entries allowed.
using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, ties broken at the last
/// differing position scanning from the highest-index variable. Compatible with
/// multiplication, and a well-order on ordinary monomials.
int compare_graded(const Exponents& a, const Exponents& b);

struct GradedLess {
  bool operator()(const Exponents& a, const Exponents& b) const { return compare_graded(a, b) < 0; }
};

struct Term {
  Exponents exponents;
  Integer coefficient;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse Laurent polynomial over Z in a fixed number of variables. Terms are
/// kept in ascending graded order with no zero coefficients, so equal values
/// have identical representations.
class LaurentPoly {
 public:
  explicit LaurentPoly(std::size_t variables = 0) : n_(variables) {}

  static LaurentPoly constant(std::size_t variables, const Integer& c);
  static LaurentPoly variable(std::size_t variables, std::size_t i);
  static LaurentPoly monomial(Exponents exponents, const Integer& c = 1);
  /// Sorts, merges equal monomials, drops zeros.
  static LaurentPoly from_terms(std::size_t variables, std::vector<Term> terms);

  std::size_t variables() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  /// Largest term in the graded order. Precondition: nonzero.
  const Term& leading() const { return terms_.back(); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Smallest exponent of each variable over all terms. Precondition: nonzero.
  Exponents min_exponents() const;
  /// Multiplies by the unit monomial x^shift.
  LaurentPoly shifted(const Exponents& shift) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  /// Canonical total order (variable count, then term sequence).
  friend bool operator<(const LaurentPoly& f, const LaurentPoly& g);
  std::size_t hash() const;

  /// "1 + x1 + 2*x1^-1*x2", terms in canonical order; "0" for zero.
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Term> terms_;
};

struct LaurentHash {
  std::size_t operator()(const LaurentPoly& f) const { return f.hash(); }
};

LaurentPoly add(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly mul(const LaurentPoly& f, const LaurentPoly& g);
LaurentPoly neg(const LaurentPoly& f);
LaurentPoly pow(const LaurentPoly& f, unsigned k);

/// h with f = g * h in Z[x^+-1], or empty. Throws DivisionByZero if g = 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& f, const LaurentPoly& g);

/// f with x_i replaced by images[i]; empty when the result is not a Laurent
/// polynomial. Throws ZeroImage or SizeMismatch.
std::optional<LaurentPoly> substitute(const LaurentPoly& f, std::span<const LaurentPoly> images);

/// r(t_1..t_n) -> r(t_sigma(1)..t_sigma(n)).
LaurentPoly permute_variables(const Permutation& sigma, const LaurentPoly& f);

/// f = numerator / x^alpha with numerator a polynomial divisible by no x_i.
struct NormalForm {
  LaurentPoly numerator;
  Exponents alpha;
  /// "1 + x1 + x2 / (x1*x2)"
  std::string to_string() const;
};

/// Throws ZeroPolynomial on f = 0.
NormalForm normal_form(const LaurentPoly& f);

/// Every coefficient of the normal-form numerator is positive. Throws ZeroPolynomial.
bool is_positive(const LaurentPoly& f);

}  // namespace cluster
