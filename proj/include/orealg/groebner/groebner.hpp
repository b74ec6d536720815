#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "orealg/ore/orepoly.hpp"

namespace orealg {

enum class OrderKind { GradedRevLex, GradedLex };

/// Graded monomial order on generator exponents. `perm` lists generator
/// indices from most to least significant; empty means declared order.
struct MonomialOrder {
  OrderKind kind = OrderKind::GradedRevLex;
  std::vector<std::size_t> perm;

  /// >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Exponents& a, const Exponents& b) const;
  /// True for the default grevlex in declared order, which matches the
  /// storage order of OrePoly terms.
  bool is_storage_order() const;
  bool operator==(const MonomialOrder& o) const { return kind == o.kind && perm == o.perm; }
};

MonomialOrder default_order();

/// Index of the leading term of f (f nonzero).
std::size_t lead_index(const OrePoly& f, const MonomialOrder& order);
const OrePoly::Term& lead_term(const OrePoly& f, const MonomialOrder& order);

/// Reduced left Groebner basis: monic elements sorted by increasing leading
/// exponent. Immutable except for an internal multiplier cache.
class GroebnerBasis {
 public:
  GroebnerBasis(AlgebraPtr alg, MonomialOrder order, std::vector<OrePoly> elements);

  const AlgebraPtr& algebra() const { return alg_; }
  const MonomialOrder& order() const { return order_; }
  const std::vector<OrePoly>& elements() const { return elements_; }
  const std::vector<Exponents>& staircase() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const;

  /// Index of an element whose leading exponent divides e, if any.
  std::optional<std::size_t> reducer(const Exponents& e) const;
  bool is_reducible(const Exponents& e) const { return reducer(e).has_value(); }

  /// d^beta * element(i), cached.
  const OrePoly& multiple(std::size_t i, const Exponents& beta) const;

  /// Full left normal form.
  OrePoly normal_form(const OrePoly& f) const;

 private:
  AlgebraPtr alg_;
  MonomialOrder order_;
  std::vector<OrePoly> elements_;
  std::vector<Exponents> leads_;
  mutable std::mutex cache_mutex_;
  mutable std::vector<std::unordered_map<Exponents, std::shared_ptr<const OrePoly>, ExponentsHash>> cache_;
};

using GBPtr = std::shared_ptr<const GroebnerBasis>;

struct BuchbergerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_skipped_chain = 0;
  std::size_t reductions_to_zero = 0;
};

/// Noncommutative Buchberger procedure with the normal selection strategy
/// and the chain criterion. Returns the reduced basis.
GBPtr buchberger(const AlgebraPtr& alg, const std::vector<OrePoly>& gens, const MonomialOrder& order,
                 BuchbergerStats* stats = nullptr);

/// Left ideal with a lazily computed Groebner basis per order.
class LeftIdeal {
 public:
  LeftIdeal(AlgebraPtr alg, std::vector<OrePoly> gens);

  const AlgebraPtr& algebra() const { return alg_; }
  const std::vector<OrePoly>& generators() const { return gens_; }
  GBPtr groebner(const MonomialOrder& order = default_order()) const;

 private:
  AlgebraPtr alg_;
  std::vector<OrePoly> gens_;
  // Shared between copies; the ideal itself is immutable.
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, GBPtr>> entries;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

OrePoly normal_form(const OrePoly& f, const GroebnerBasis& G);
bool is_member(const OrePoly& f, const LeftIdeal& I, const MonomialOrder& order = default_order());
/// Mutual membership of generators.
bool same_ideal(const LeftIdeal& a, const LeftIdeal& b, const MonomialOrder& order = default_order());

/// Memoized normal forms of the monomials d^alpha, built incrementally as
/// NF(d_i * NF(d^(alpha - e_i))). Not thread-safe; one per computation.
class NormalFormTable {
 public:
  explicit NormalFormTable(GBPtr gb) : gb_(std::move(gb)) {}
  const OrePoly& of(const Exponents& alpha);
  const GroebnerBasis& basis() const { return *gb_; }

 private:
  GBPtr gb_;
  std::unordered_map<Exponents, OrePoly, ExponentsHash> memo_;
};

/// All exponents of total degree <= s in n variables, by increasing degree.
std::vector<Exponents> monomials_up_to(std::size_t n, unsigned s);
/// All exponents with support in `mask` of total degree <= s.
std::vector<Exponents> monomials_up_to(std::uint32_t mask, unsigned s);

}  // namespace orealg
