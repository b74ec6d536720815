#include "orealg/closure/closure.hpp"

#include <algorithm>
#include <map>

#include "orealg/arith/linsolve.hpp"
#include "orealg/error.hpp"

namespace orealg {

namespace {

// Coordinate vector: interned coordinate id -> coefficient.
using Coords = std::map<std::size_t, RatFunc>;

void add_scaled(Coords& acc, const Coords& v, const RatFunc& c) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) {
    auto [it, fresh] = acc.try_emplace(k, c * x);
    if (!fresh) {
      it->second = it->second + c * x;
      if (it->second.is_zero()) acc.erase(it);
    }
  }
}

/// Expansion of d^alpha applied to the target function as a combination of
/// coordinate functions, memoized by alpha and built one generator at a time.
class Expansion {
 public:
  explicit Expansion(AlgebraPtr alg) : alg_(std::move(alg)) {}
  virtual ~Expansion() = default;

  const Coords& of(const Exponents& alpha) {
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
    Coords r;
    if (alpha.is_zero()) {
      r = base();
    } else {
      std::size_t i = 0;
      while (alpha[i] == 0) ++i;
      const Coords prev = of(alpha - Exponents::unit(i));
      for (const auto& [k, c] : prev) {
        add_scaled(r, step(i, k), alg_->sigma(i, c));
        RatFunc d = alg_->delta(i, c);
        if (!d.is_zero()) add_scaled(r, Coords{{k, RatFunc(1)}}, d);
      }
    }
    return memo_.emplace(alpha, std::move(r)).first->second;
  }

  std::size_t coordinate_count() const { return coordinate_count_; }

 protected:
  /// Coordinates of the target function itself.
  virtual Coords base() = 0;
  /// Coordinates of d_i applied to coordinate function k.
  virtual Coords step(std::size_t i, std::size_t k) = 0;

  AlgebraPtr alg_;
  std::size_t coordinate_count_ = 0;

 private:
  std::unordered_map<Exponents, Coords, ExponentsHash> memo_;
};

using Tuple = std::vector<Exponents>;

// Coordinates are products of normal-form monomials of the factors.
class ProductExpansion : public Expansion {
 public:
  ProductExpansion(AlgebraPtr alg, std::vector<GBPtr> gbs) : Expansion(std::move(alg)) {
    for (auto& g : gbs) tables_.emplace_back(std::move(g));
    forms_.reserve(alg_->size());
    for (std::size_t i = 0; i < alg_->size(); ++i) forms_.push_back(alg_->linear_form(i));
  }

 protected:
  Coords base() override { return Coords{{intern(Tuple(tables_.size())), RatFunc(1)}}; }

  Coords step(std::size_t i, std::size_t k) override {
    auto key = std::make_pair(i, k);
    if (auto it = steps_.find(key); it != steps_.end()) return it->second;
    const Tuple t = tuples_[k];
    // Expansion of d_i applied to the suffix product F_j ... F_r, as a map
    // from suffix tuples; built from the last factor backwards with
    // d(F V) = s1 (dF)(dV) + s0 F (dV) + d1 (dF) V.
    const LinearForm& lf = forms_[i];
    std::map<Tuple, RatFunc> dv;
    for (std::size_t j = t.size(); j-- > 0;) {
      std::vector<std::pair<Exponents, RatFunc>> df;
      for (const auto& term : tables_[j].of(t[j] + Exponents::unit(i)).terms()) df.emplace_back(term.exp, term.coeff);
      std::map<Tuple, RatFunc> next;
      auto put = [&](Tuple key2, const RatFunc& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = next.try_emplace(std::move(key2), c);
        if (!fresh) {
          it->second = it->second + c;
          if (it->second.is_zero()) next.erase(it);
        }
      };
      if (j + 1 == t.size()) {
        for (const auto& [e, c] : df) put(Tuple{e}, c);
      } else {
        Tuple rest(t.begin() + static_cast<long>(j) + 1, t.end());
        for (const auto& [tail, c2] : dv) {
          if (!lf.s1.is_zero())
            for (const auto& [e, c] : df) {
              Tuple key2{e};
              key2.insert(key2.end(), tail.begin(), tail.end());
              put(std::move(key2), lf.s1 * c * c2);
            }
          if (!lf.s0.is_zero()) {
            Tuple key2{t[j]};
            key2.insert(key2.end(), tail.begin(), tail.end());
            put(std::move(key2), lf.s0 * c2);
          }
        }
        if (!lf.d1.is_zero())
          for (const auto& [e, c] : df) {
            Tuple key2{e};
            key2.insert(key2.end(), rest.begin(), rest.end());
            put(std::move(key2), lf.d1 * c);
          }
      }
      dv = std::move(next);
    }
    Coords out;
    for (auto& [tup, c] : dv) out.emplace(intern(tup), c);
    return steps_.emplace(key, std::move(out)).first->second;
  }

 private:
  std::size_t intern(const Tuple& t) {
    auto [it, fresh] = ids_.try_emplace(t, tuples_.size());
    if (fresh) {
      tuples_.push_back(t);
      coordinate_count_ = tuples_.size();
    }
    return it->second;
  }

  std::vector<NormalFormTable> tables_;
  std::vector<LinearForm> forms_;
  std::map<Tuple, std::size_t> ids_;
  std::vector<Tuple> tuples_;
  std::map<std::pair<std::size_t, std::size_t>, Coords> steps_;
};

// Coordinates (which, beta) over the direct sum of normal-form spaces.
class SumExpansion : public Expansion {
 public:
  SumExpansion(AlgebraPtr alg, std::vector<GBPtr> gbs) : Expansion(std::move(alg)) {
    for (auto& g : gbs) tables_.emplace_back(std::move(g));
  }

 protected:
  Coords base() override {
    Coords r;
    for (std::size_t w = 0; w < tables_.size(); ++w)
      for (const auto& t : tables_[w].of(Exponents{}).terms()) r.emplace(intern(w, t.exp), t.coeff);
    return r;
  }

  Coords step(std::size_t i, std::size_t k) override {
    const auto& [w, beta] = keys_[k];
    Coords r;
    for (const auto& t : tables_[w].of(beta + Exponents::unit(i)).terms()) r.emplace(intern(w, t.exp), t.coeff);
    return r;
  }

 private:
  std::size_t intern(std::size_t w, const Exponents& e) {
    auto key = std::make_pair(w, e);
    for (std::size_t j = 0; j < keys_.size(); ++j)
      if (keys_[j] == key) return j;
    keys_.push_back(key);
    coordinate_count_ = keys_.size();
    return keys_.size() - 1;
  }

  std::vector<NormalFormTable> tables_;
  std::vector<std::pair<std::size_t, Exponents>> keys_;
};

// d^alpha L f = NF(d^alpha L) f, with coordinates the normal-form monomials.
class ApplyExpansion : public Expansion {
 public:
  ApplyExpansion(AlgebraPtr alg, GBPtr gb, OrePoly L) : Expansion(std::move(alg)), gb_(std::move(gb)), L_(std::move(L)) {}

 protected:
  Coords base() override { return to_coords(gb_->normal_form(L_)); }

  Coords step(std::size_t i, std::size_t k) override {
    return to_coords(gb_->normal_form(OrePoly::monomial(alg_, keys_[k] + Exponents::unit(i))));
  }

 private:
  Coords to_coords(const OrePoly& p) {
    Coords r;
    for (const auto& t : p.terms()) {
      auto it = std::find(keys_.begin(), keys_.end(), t.exp);
      std::size_t id = static_cast<std::size_t>(it - keys_.begin());
      if (it == keys_.end()) keys_.push_back(t.exp);
      coordinate_count_ = keys_.size();
      r.emplace(id, t.coeff);
    }
    return r;
  }

  GBPtr gb_;
  OrePoly L_;
  std::vector<Exponents> keys_;
};

ClosureResult unit_result(const AlgebraPtr& alg) {
  LeftIdeal unit(alg, {OrePoly(alg, RatFunc(1))});
  return ClosureResult{unit, Dimension::of_unit(), Dimension::of_unit(), true, 0, {}};
}

ClosureResult run(const AlgebraPtr& alg, Expansion& ex, Dimension bound, const ClosureOptions& opt) {
  if (opt.max_degree < 1) throw Error(ErrorCode::OutOfDomain, "closure needs max_degree >= 1");
  ClosureResult res{LeftIdeal(alg, {}), Dimension{false, static_cast<unsigned>(alg->size())}, bound, false, 0, {}};
  const auto all = monomials_up_to(alg->size(), opt.max_degree);
  std::size_t upto = 0;
  for (unsigned s = 0; s <= opt.max_degree; ++s) {
    while (upto < all.size() && all[upto].total() <= s) ex.of(all[upto++]);
    res.coordinate_counts.push_back(ex.coordinate_count());
    if (s == 0) continue;
    // Column j is monomial all[j]; row k collects coordinate k.
    std::vector<SparseRow> rows(ex.coordinate_count());
    for (std::size_t j = 0; j < upto; ++j)
      for (const auto& [k, c] : ex.of(all[j])) rows[k].emplace_back(j, c);
    auto kernel = nullspace(rows, upto, opt.seed + s);
    std::vector<OrePoly> rel;
    for (const auto& v : kernel) {
      OrePolyBuilder b(alg);
      for (std::size_t j = 0; j < upto; ++j)
        if (!v[j].is_zero()) b.add(all[j], v[j]);
      rel.push_back(b.build());
    }
    res.degree_used = s;
    if (rel.empty()) continue;
    GBPtr gb = buchberger(alg, rel, opt.order);
    std::vector<OrePoly> gens;
    for (const auto& g : gb->elements()) gens.push_back(g.primitive());
    res.ideal = LeftIdeal(alg, std::move(gens));
    res.dimension = hilbert_dimension(*gb);
    res.bound_met = res.dimension.empty || (!bound.empty && res.dimension.value <= bound.value);
    if (res.bound_met && opt.stop_at_bound) break;
  }
  return res;
}

void check_same_algebra(const std::vector<LeftIdeal>& ideals) {
  if (ideals.empty()) throw Error(ErrorCode::OutOfDomain, "closure needs at least one ideal");
  for (const auto& I : ideals)
    if (!(*I.algebra() == *ideals[0].algebra()))
      throw Error(ErrorCode::AlgebraMismatch, "closure inputs live in different algebras");
}

}  // namespace

ClosureResult closure_product(const std::vector<LeftIdeal>& factors, const ClosureOptions& opt) {
  check_same_algebra(factors);
  const AlgebraPtr& alg = factors[0].algebra();
  std::vector<GBPtr> gbs;
  unsigned bound = 0;
  for (const auto& I : factors) {
    GBPtr g = I.groebner(opt.order);
    if (g->is_unit()) return unit_result(alg);
    bound += hilbert_dimension(*g).value;
    gbs.push_back(std::move(g));
  }
  ProductExpansion ex(alg, std::move(gbs));
  return run(alg, ex, Dimension{false, std::min<unsigned>(bound, static_cast<unsigned>(alg->size()))}, opt);
}

ClosureResult closure_product(const LeftIdeal& a, const LeftIdeal& b, const ClosureOptions& opt) {
  return closure_product(std::vector<LeftIdeal>{a, b}, opt);
}

ClosureResult closure_sum(const std::vector<LeftIdeal>& terms, const ClosureOptions& opt) {
  check_same_algebra(terms);
  const AlgebraPtr& alg = terms[0].algebra();
  std::vector<GBPtr> gbs;
  Dimension bound = Dimension::of_unit();
  for (const auto& I : terms) {
    GBPtr g = I.groebner(opt.order);
    Dimension d = hilbert_dimension(*g);
    if (d.empty) continue;
    if (bound.empty || d.value > bound.value) bound = d;
    gbs.push_back(std::move(g));
  }
  if (gbs.empty()) return unit_result(alg);
  SumExpansion ex(alg, std::move(gbs));
  return run(alg, ex, bound, opt);
}

ClosureResult closure_sum(const LeftIdeal& a, const LeftIdeal& b, const ClosureOptions& opt) {
  return closure_sum(std::vector<LeftIdeal>{a, b}, opt);
}

ClosureResult closure_apply(const OrePoly& L, const LeftIdeal& I, const ClosureOptions& opt) {
  require_same_algebra(L, OrePoly(I.algebra()));
  const AlgebraPtr& alg = I.algebra();
  GBPtr g = I.groebner(opt.order);
  if (g->is_unit() || g->normal_form(L).is_zero()) return unit_result(alg);
  ApplyExpansion ex(alg, g, L);
  return run(alg, ex, hilbert_dimension(*g), opt);
}

}  // namespace orealg
