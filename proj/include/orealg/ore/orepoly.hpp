#pragma once

#include <string>
#include <vector>

#include "orealg/arith/monomial.hpp"
#include "orealg/arith/ratfunc.hpp"
#include "orealg/ore/algebra.hpp"

namespace orealg {

/// Skew polynomial sum c_a * d^a over an Ore algebra, coefficients on the
/// left. Terms are stored in decreasing grevlex order of the exponents with
/// no zero coefficients.
class OrePoly {
 public:
  struct Term {
    Exponents exp;
    RatFunc coeff;
  };

  OrePoly() = default;
  explicit OrePoly(AlgebraPtr alg) : alg_(std::move(alg)) {}
  OrePoly(AlgebraPtr alg, const RatFunc& c);

  static OrePoly generator(AlgebraPtr alg, std::size_t i);
  static OrePoly monomial(AlgebraPtr alg, const Exponents& e, const RatFunc& c = RatFunc(1));
  static OrePoly from_terms(AlgebraPtr alg, std::vector<Term> terms);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  unsigned degree() const { return terms_.empty() ? 0 : terms_.front().exp.total(); }
  RatFunc coefficient(const Exponents& e) const;
  /// Union of variables used by the coefficients.
  std::uint32_t coeff_var_mask() const;
  /// Mask of generators with a positive exponent in some term.
  std::uint32_t generator_mask() const;

  OrePoly operator-() const;
  OrePoly& operator+=(const OrePoly& o);
  OrePoly& operator-=(const OrePoly& o);
  friend OrePoly operator+(OrePoly a, const OrePoly& b) { return a += b; }
  friend OrePoly operator-(OrePoly a, const OrePoly& b) { return a -= b; }
  /// Skew product under the commutation rule of the algebra.
  friend OrePoly operator*(const OrePoly& a, const OrePoly& b);
  /// Left multiplication by a coefficient (coefficientwise).
  friend OrePoly operator*(const RatFunc& c, const OrePoly& a);
  friend bool operator==(const OrePoly& a, const OrePoly& b);
  friend bool operator!=(const OrePoly& a, const OrePoly& b) { return !(a == b); }

  /// d^e * this.
  OrePoly left_mul_monomial(const Exponents& e) const;
  /// d_i * this.
  OrePoly left_mul_generator(std::size_t i) const;

  /// Multiplies every coefficient by the lcm of the denominators, then
  /// removes the polynomial content; positive leading rational coefficient.
  OrePoly primitive() const;

  std::string to_string() const;

 private:
  AlgebraPtr alg_;
  std::vector<Term> terms_;
  friend class OrePolyBuilder;
};

/// Accumulates terms with hashing; produces a canonical OrePoly.
class OrePolyBuilder {
  using Term = OrePoly::Term;

 public:
  explicit OrePolyBuilder(AlgebraPtr alg) : alg_(std::move(alg)) {}
  void add(const Exponents& e, const RatFunc& c);
  void add(const OrePoly& p, const RatFunc& scale = RatFunc(1));
  OrePoly build();

 private:
  AlgebraPtr alg_;
  std::vector<Term> pending_;
};

/// Throws AlgebraMismatch unless both operands live in equal algebras.
void require_same_algebra(const OrePoly& a, const OrePoly& b);

/// Sends each listed Shift generator S to (Delta + 1) in the
/// algebra where it has Difference kind.
OrePoly shift_to_difference(const OrePoly& f, const std::vector<std::size_t>& gens, const AlgebraPtr& target);
/// Inverse map: Delta is sent to (S - 1).
OrePoly difference_to_shift(const OrePoly& f, const std::vector<std::size_t>& gens, const AlgebraPtr& target);

}  // namespace orealg
