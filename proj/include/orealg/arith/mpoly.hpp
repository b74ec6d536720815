#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orealg/arith/monomial.hpp"

namespace orealg {

using Rational = mpq_class;
using Integer = mpz_class;

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// decreasing degree-reverse-lexicographic order with no zero coefficients,
/// so structurally equal polynomials compare equal.
class MPoly {
 public:
  struct Term {
    Exponents exp;
    Rational coeff;
  };

  MPoly() = default;
  explicit MPoly(const Rational& c);
  explicit MPoly(long c) : MPoly(Rational(c)) {}

  static MPoly variable(std::size_t index);
  static MPoly monomial(const Exponents& e, const Rational& c = 1);
  /// Builds from unsorted terms, combining duplicates and dropping zeros.
  static MPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].exp.is_zero()); }
  bool is_one() const;
  Rational constant_value() const;  // value if is_constant()
  /// Coefficient of the constant term (zero if absent).
  Rational constant_term() const;

  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& lead() const { return terms_.front(); }
  const Rational& lead_coeff() const { return terms_.front().coeff; }

  unsigned total_degree() const;
  unsigned degree(std::size_t var) const;
  /// Sum of degrees in the variables flagged by mask.
  unsigned degree_in(std::uint32_t var_mask) const;
  bool uses(std::size_t var) const { return degree(var) > 0; }
  std::uint32_t var_mask() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);
  MPoly& operator/=(const Rational& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned e) const;

  /// Exact quotient a / b if b divides a, otherwise nullopt.
  static std::optional<MPoly> divexact(const MPoly& a, const MPoly& b);

  MPoly derivative(std::size_t var) const;
  /// Substitutes x_var -> x_var + c.
  MPoly shift(std::size_t var, const Rational& c) const;
  /// Substitutes x_var -> image.
  MPoly compose(std::size_t var, const MPoly& image) const;
  /// Substitutes x_var -> value.
  MPoly evaluate(std::size_t var, const Rational& value) const;
  /// Substitutes every flagged variable by the matching entry of values.
  MPoly evaluate(std::uint32_t var_mask, std::span<const Rational> values) const;
  Rational evaluate_all(std::span<const Rational> values) const;
  /// Evaluation modulo a prime p < 2^62 at a point given modulo p.
  /// Returns nullopt if a coefficient denominator vanishes mod p.
  std::optional<std::uint64_t> evaluate_mod(std::span<const std::uint64_t> point, std::uint64_t p) const;

  /// Positive rational c with this / c having coprime integer coefficients
  /// and positive leading coefficient (sign is folded into c).
  Rational content() const;
  MPoly primitive() const;
  /// Divides by the leading coefficient.
  MPoly monic() const;

  /// Groups terms by their exponents restricted to var_mask. Each group's
  /// coefficient is a polynomial in the remaining variables.
  std::vector<std::pair<Exponents, MPoly>> coefficients_in(std::uint32_t var_mask) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  std::vector<Term> terms_;
  void normalize_sorted();
};

/// Sorts terms in decreasing grevlex and merges duplicates.
void sort_and_combine(std::vector<MPoly::Term>& terms);

/// Masks every variable index below n.
inline std::uint32_t all_vars_mask(std::size_t n) { return n >= 32 ? ~0u : ((1u << n) - 1u); }

}  // namespace orealg
