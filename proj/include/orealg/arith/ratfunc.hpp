#pragma once

#include <cstddef>
#include <string>

#include "orealg/arith/mpoly.hpp"

namespace orealg {

/// Element of Q(x_1, ..., x_m). Always reduced: gcd(num, den) = 1 and den
/// is monic under grevlex, so equal values have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const MPoly& p) : num_(p), den_(1) {}  // NOLINT(implicit)
  RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT(implicit)
  RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(implicit)
  /// Builds num/den and normalizes. Throws DivisionByZero if den = 0.
  RatFunc(const MPoly& num, const MPoly& den);

  static RatFunc variable(std::size_t i) { return RatFunc(MPoly::variable(i)); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }
  std::uint32_t var_mask() const { return num_.var_mask() | den_.var_mask(); }

  RatFunc operator-() const;
  RatFunc inverse() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc pow(int e) const;
  RatFunc derivative(std::size_t var) const;
  RatFunc shift(std::size_t var, const Rational& c) const { return RatFunc(num_.shift(var, c), den_.shift(var, c)); }
  RatFunc compose(std::size_t var, const MPoly& image) const {
    return RatFunc(num_.compose(var, image), den_.compose(var, image));
  }
  RatFunc compose(std::size_t var, const RatFunc& image) const;
  RatFunc evaluate(std::size_t var, const Rational& v) const;
  /// Substitutes every flagged variable by the matching entry of values.
  RatFunc evaluate(std::uint32_t var_mask, std::span<const Rational> values) const;
  /// Full evaluation; throws DenominatorVanishes when den vanishes.
  Rational evaluate_all(std::span<const Rational> values) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  MPoly num_;
  MPoly den_;
  struct Reduced {};
  RatFunc(MPoly num, MPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_unit();
};

}  // namespace orealg
