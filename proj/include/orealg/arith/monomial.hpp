#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>

namespace orealg {

/// Upper bound on the number of indeterminates in one exponent vector.
/// Shared by commutative polynomials (ground variables plus parameters)
/// and skew polynomials (Ore generators).
inline constexpr std::size_t kMaxVars = 8;

/// Dense exponent vector. Entries past the owner's arity stay zero, so
/// equality and hashing never need to know the arity.
struct Exponents {
  std::array<std::uint16_t, kMaxVars> e{};

  constexpr std::uint16_t operator[](std::size_t i) const { return e[i]; }
  constexpr std::uint16_t& operator[](std::size_t i) { return e[i]; }

  constexpr unsigned total() const {
    unsigned s = 0;
    for (auto v : e) s += v;
    return s;
  }
  constexpr bool is_zero() const {
    for (auto v : e)
      if (v) return false;
    return true;
  }

  friend constexpr bool operator==(const Exponents&, const Exponents&) = default;
  /// Plain lexicographic order for use as a container key; unrelated to monomial orders.
  friend constexpr auto operator<=>(const Exponents&, const Exponents&) = default;

  static Exponents unit(std::size_t i) {
    Exponents r;
    r[i] = 1;
    return r;
  }
};

inline Exponents operator+(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(a[i]) + b[i];
    if (s > 0xFFFFu) throw std::overflow_error("exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

/// Componentwise a - b; caller guarantees b divides a.
inline Exponents operator-(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return r;
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] > b[i] ? a[i] : b[i];
  return r;
}

inline Exponents gcd(const Exponents& a, const Exponents& b) {
  Exponents r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r[i] = a[i] < b[i] ? a[i] : b[i];
  return r;
}

/// Degree reverse lexicographic comparison: returns >0 if a > b.
inline int grevlex_cmp(const Exponents& a, const Exponents& b) {
  unsigned da = a.total(), db = b.total();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = kMaxVars; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

struct ExponentsHash {
  std::size_t operator()(const Exponents& x) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto v : x.e) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace orealg
