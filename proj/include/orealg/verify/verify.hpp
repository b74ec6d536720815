#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orealg/ore/orepoly.hpp"

namespace orealg {

using Index = std::vector<long>;

/// Exact integer-indexed sequence with a memo table. Outside the declared
/// support the value is zero; outside the domain evaluation throws
/// OutOfDomain.
class SequenceOracle {
 public:
  using Recurse = std::function<Rational(const Index&)>;
  /// Evaluation rule; recursive calls go through `self`.
  using Rule = std::function<Rational(const Index& i, const Recurse& self)>;
  using Predicate = std::function<bool(const Index&)>;

  SequenceOracle(std::string name, std::size_t arity, Rule rule, Predicate support = {}, Predicate domain = {});

  const std::string& name() const { return name_; }
  std::size_t arity() const { return arity_; }
  bool in_support(const Index& i) const { return !support_ || support_(i); }
  bool in_domain(const Index& i) const { return !domain_ || domain_(i); }

  Rational eval(const Index& i) const;
  /// Same value without touching the memo table.
  Rational eval_uncached(const Index& i) const;
  Rational operator()(const Index& i) const { return eval(i); }
  std::size_t memo_size() const;

 private:
  void check(const Index& i) const;

  std::string name_;
  std::size_t arity_;
  Rule rule_;
  Predicate support_, domain_;
  struct Memo;
  std::shared_ptr<Memo> memo_;
};

using OraclePtr = std::shared_ptr<const SequenceOracle>;

/// Built-in oracles, shared process-wide.
OraclePtr binomial_oracle();   ///< C(n,k), Pascal; zero unless 0 <= k <= n
OraclePtr stirling2_oracle();  ///< S2(n,k) = S2(n-1,k-1) + k S2(n-1,k)
OraclePtr eulerian_oracle();   ///< E1(n,m) = (m+1) E1(n-1,m) + (n-m) E1(n-1,m-1)
OraclePtr bernoulli_oracle();  ///< B_n with B_1 = -1/2; domain n >= 0
OraclePtr factorial_oracle();  ///< n!; domain n >= 0
/// Looks a built-in up by name; nullptr if unknown.
OraclePtr builtin_oracle(const std::string& name);

/// Oracle from a plain function, memoized.
OraclePtr make_oracle(std::string name, std::size_t arity, std::function<Rational(const Index&)> fn,
                      SequenceOracle::Predicate support = {});

/// Points lo..hi (inclusive) per coordinate.
struct SampleBox {
  Index lo, hi;
  static SampleBox cube(std::size_t dim, long lo, long hi) { return {Index(dim, lo), Index(dim, hi)}; }
  std::size_t size() const;
  void for_each(const std::function<void(const Index&)>& fn) const;
};

struct Sample {
  Index point;
  /// Empty when a coefficient denominator vanishes at the point.
  std::optional<Rational> value;
};

/// (L h)(p) for every p in the box. Ground variable j of L's algebra is
/// index position j of h; Difference generators expand binomially.
/// Throws NonDiscreteAlgebra unless every generator is Shift or Difference.
std::vector<Sample> apply_operator_numeric(const OrePoly& L, const SequenceOracle& h, const SampleBox& box);

/// Definite sum of a summand over its natural window in one index.
struct DefiniteSum {
  OraclePtr summand;
  std::size_t index;  ///< position of the summation variable
  /// Window [lo, hi] outside which the summand vanishes, from the other
  /// indices. The value at position `index` is ignored.
  std::function<std::pair<long, long>(const Index&)> window;
};

struct IdentityReport {
  std::size_t points = 0;
  std::size_t skipped = 0;
  std::vector<Index> sum_not_annihilated;
  std::vector<Index> closed_form_not_annihilated;
  std::vector<Index> initial_value_mismatch;
  std::vector<Index> value_mismatch;
  std::vector<Index> summation_order_mismatch;
  std::vector<Index> boundary_violation;
  std::string note = "verified on a finite box only";

  bool passed() const;
  std::string summary() const;
};

struct IdentityCheck {
  DefiniteSum sum;
  OraclePtr closed_form;  ///< same arity as the summand; summation index ignored
  OrePoly telescoper;     ///< free of the summation generator
  SampleBox box;          ///< over all summand indices; summation coordinate pinned
  /// Points where sum and closed form must agree as initial values.
  std::function<bool(const Index&)> initial_slice;
  /// How far past the window the summand must vanish.
  unsigned boundary_margin = 2;
};

/// (i) telescoper annihilates the brute-force sum, (ii) it annihilates the
/// closed form, (iii) initial values agree on the slice; additionally the
/// two sides agree on the whole box, forward and reversed summation
/// coincide, and the summand vanishes just outside each window.
IdentityReport check_identity(const IdentityCheck& c);

/// Brute-force value of the definite sum, summed in the given direction.
Rational definite_sum(const DefiniteSum& s, const Index& at, bool reversed = false);

}  // namespace orealg
