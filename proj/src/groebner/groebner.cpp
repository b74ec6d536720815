#include "orealg/groebner/groebner.hpp"

#include <algorithm>
#include <set>

#include "orealg/error.hpp"

namespace orealg {

int MonomialOrder::compare(const Exponents& a, const Exponents& b) const {
  unsigned da = a.total(), db = b.total();
  if (da != db) return da > db ? 1 : -1;
  std::size_t n = perm.empty() ? kMaxVars : perm.size();
  auto at = [&](const Exponents& e, std::size_t pos) { return perm.empty() ? e[pos] : e[perm[pos]]; };
  if (kind == OrderKind::GradedRevLex) {
    for (std::size_t pos = n; pos-- > 0;) {
      auto x = at(a, pos), y = at(b, pos);
      if (x != y) return x < y ? 1 : -1;
    }
  } else {
    for (std::size_t pos = 0; pos < n; ++pos) {
      auto x = at(a, pos), y = at(b, pos);
      if (x != y) return x > y ? 1 : -1;
    }
  }
  return 0;
}

bool MonomialOrder::is_storage_order() const {
  if (kind != OrderKind::GradedRevLex) return false;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] != i) return false;
  return true;
}

MonomialOrder default_order() { return MonomialOrder{}; }

std::size_t lead_index(const OrePoly& f, const MonomialOrder& order) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading term of zero");
  if (order.is_storage_order()) return 0;
  std::size_t best = 0;
  const auto& ts = f.terms();
  for (std::size_t i = 1; i < ts.size(); ++i)
    if (order.compare(ts[i].exp, ts[best].exp) > 0) best = i;
  return best;
}

const OrePoly::Term& lead_term(const OrePoly& f, const MonomialOrder& order) {
  return f.terms()[lead_index(f, order)];
}

namespace {

OrePoly make_monic(const OrePoly& f, const MonomialOrder& order) {
  const RatFunc& lc = lead_term(f, order).coeff;
  if (lc.is_one()) return f;
  return lc.inverse() * f;
}

OrePoly drop_term(const OrePoly& f, std::size_t idx) {
  std::vector<OrePoly::Term> ts;
  ts.reserve(f.size() - 1);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (i != idx) ts.push_back(f.terms()[i]);
  OrePolyBuilder b(f.algebra());
  for (auto& t : ts) b.add(t.exp, t.coeff);
  return b.build();
}

/// Working set used during Buchberger and for the final basis.
class Reducer {
 public:
  Reducer(const AlgebraPtr& alg, const MonomialOrder& order) : alg_(alg), order_(order) {}

  std::size_t add(OrePoly g) {
    leads_.push_back(lead_term(g, order_).exp);
    elems_.push_back(std::move(g));
    caches_.emplace_back();
    active_.push_back(true);
    return elems_.size() - 1;
  }
  void deactivate(std::size_t i) { active_[i] = false; }
  bool active(std::size_t i) const { return active_[i]; }
  const OrePoly& elem(std::size_t i) const { return elems_[i]; }
  const Exponents& lead(std::size_t i) const { return leads_[i]; }
  std::size_t size() const { return elems_.size(); }

  std::optional<std::size_t> reducer(const Exponents& e, std::optional<std::size_t> skip = std::nullopt) const {
    for (std::size_t i = 0; i < elems_.size(); ++i)
      if (active_[i] && i != skip && divides(leads_[i], e)) return i;
    return std::nullopt;
  }

  const OrePoly& multiple(std::size_t i, const Exponents& beta) {
    auto& cache = caches_[i];
    auto it = cache.find(beta);
    if (it != cache.end()) return it->second;
    if (beta.is_zero()) return cache.emplace(beta, elems_[i]).first->second;
    std::size_t g = 0;
    while (beta[g] == 0) ++g;
    Exponents prev = beta;
    prev[g] -= 1;
    OrePoly m = multiple(i, prev).left_mul_generator(g);
    return cache.emplace(beta, std::move(m)).first->second;
  }

  /// Full reduction. With `skip`, that element is not used (tail reduction).
  OrePoly normal_form(OrePoly p, std::optional<std::size_t> skip = std::nullopt) {
    OrePolyBuilder rest(alg_);
    while (!p.is_zero()) {
      std::size_t li = lead_index(p, order_);
      const OrePoly::Term& t = p.terms()[li];
      if (auto r = reducer(t.exp, skip)) {
        const OrePoly& m = multiple(*r, t.exp - leads_[*r]);
        RatFunc c = t.coeff;
        p -= c * m;
      } else {
        rest.add(t.exp, t.coeff);
        p = drop_term(p, li);
      }
    }
    return rest.build();
  }

 private:
  AlgebraPtr alg_;
  MonomialOrder order_;
  std::vector<OrePoly> elems_;
  std::vector<Exponents> leads_;
  std::vector<std::unordered_map<Exponents, OrePoly, ExponentsHash>> caches_;
  std::vector<bool> active_;
};

struct Pair {
  std::size_t i, j;
  Exponents lcm;
};

}  // namespace

GroebnerBasis::GroebnerBasis(AlgebraPtr alg, MonomialOrder order, std::vector<OrePoly> elements)
    : alg_(std::move(alg)), order_(std::move(order)), elements_(std::move(elements)) {
  for (const auto& g : elements_) leads_.push_back(lead_term(g, order_).exp);
  cache_.resize(elements_.size());
}

bool GroebnerBasis::is_unit() const { return elements_.size() == 1 && leads_[0].is_zero(); }

std::optional<std::size_t> GroebnerBasis::reducer(const Exponents& e) const {
  for (std::size_t i = 0; i < leads_.size(); ++i)
    if (divides(leads_[i], e)) return i;
  return std::nullopt;
}

const OrePoly& GroebnerBasis::multiple(std::size_t i, const Exponents& beta) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_[i].find(beta);
    if (it != cache_[i].end()) return *it->second;
  }
  std::shared_ptr<const OrePoly> value;
  if (beta.is_zero()) {
    value = std::make_shared<const OrePoly>(elements_[i]);
  } else {
    std::size_t g = 0;
    while (beta[g] == 0) ++g;
    Exponents prev = beta;
    prev[g] -= 1;
    value = std::make_shared<const OrePoly>(multiple(i, prev).left_mul_generator(g));
  }
  std::lock_guard lock(cache_mutex_);
  return *cache_[i].emplace(beta, std::move(value)).first->second;
}

OrePoly GroebnerBasis::normal_form(const OrePoly& f) const {
  if (f.algebra()) require_same_algebra(f, OrePoly(alg_));
  OrePolyBuilder rest(alg_);
  OrePoly p = f;
  while (!p.is_zero()) {
    std::size_t li = lead_index(p, order_);
    const OrePoly::Term& t = p.terms()[li];
    if (auto r = reducer(t.exp)) {
      RatFunc c = t.coeff;
      p -= c * multiple(*r, t.exp - leads_[*r]);
    } else {
      rest.add(t.exp, t.coeff);
      p = drop_term(p, li);
    }
  }
  return rest.build();
}

GBPtr buchberger(const AlgebraPtr& alg, const std::vector<OrePoly>& gens, const MonomialOrder& order,
                 BuchbergerStats* stats) {
  BuchbergerStats local;
  BuchbergerStats& st = stats ? *stats : local;
  Reducer R(alg, order);
  std::vector<Pair> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;  // pairs still pending
  bool unit = false;

  auto insert = [&](OrePoly h) {
    h = make_monic(h, order);
    std::size_t k = R.add(std::move(h));
    if (R.lead(k).is_zero()) unit = true;
    for (std::size_t i = 0; i < k; ++i) {
      pending.push_back({i, k, lcm(R.lead(i), R.lead(k))});
      open.insert({i, k});
    }
  };

  // Sort inputs by leading exponent so the result does not depend on input order.
  std::vector<OrePoly> inputs;
  for (const auto& g : gens)
    if (!g.is_zero()) inputs.push_back(make_monic(g, order));
  std::sort(inputs.begin(), inputs.end(), [&](const OrePoly& a, const OrePoly& b) {
    return order.compare(lead_term(a, order).exp, lead_term(b, order).exp) < 0;
  });
  for (auto& g : inputs) {
    if (unit) break;
    OrePoly h = R.normal_form(g);
    if (!h.is_zero()) insert(std::move(h));
  }

  while (!pending.empty() && !unit) {
    auto best = std::min_element(pending.begin(), pending.end(), [&](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = *best;
    pending.erase(best);
    open.erase({p.i, p.j});
    ++st.pairs_considered;

    bool chain = false;
    for (std::size_t k = 0; k < R.size() && !chain; ++k) {
      if (k == p.i || k == p.j || !divides(R.lead(k), p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!open.count(key(p.i, k)) && !open.count(key(p.j, k))) chain = true;
    }
    if (chain) {
      ++st.pairs_skipped_chain;
      continue;
    }
    OrePoly s = R.multiple(p.i, p.lcm - R.lead(p.i)) - R.multiple(p.j, p.lcm - R.lead(p.j));
    OrePoly h = R.normal_form(std::move(s));
    if (h.is_zero()) {
      ++st.reductions_to_zero;
      continue;
    }
    insert(std::move(h));
  }

  if (unit) return std::make_shared<const GroebnerBasis>(alg, order, std::vector<OrePoly>{OrePoly(alg, RatFunc(1))});

  // Keep minimal leading exponents, then reduce tails.
  for (std::size_t i = 0; i < R.size(); ++i) {
    for (std::size_t j = 0; j < R.size(); ++j) {
      if (i == j || !R.active(j)) continue;
      if (divides(R.lead(j), R.lead(i)) && (R.lead(j) != R.lead(i) || j < i)) {
        R.deactivate(i);
        break;
      }
    }
  }
  std::vector<OrePoly> out;
  for (std::size_t i = 0; i < R.size(); ++i) {
    if (!R.active(i)) continue;
    const OrePoly& g = R.elem(i);
    std::size_t li = lead_index(g, order);
    OrePoly tail = R.normal_form(drop_term(g, li), i);
    out.push_back(OrePoly::monomial(alg, g.terms()[li].exp, g.terms()[li].coeff) + tail);
  }
  for (auto& g : out) g = make_monic(g, order);
  std::sort(out.begin(), out.end(), [&](const OrePoly& a, const OrePoly& b) {
    return order.compare(lead_term(a, order).exp, lead_term(b, order).exp) < 0;
  });
  return std::make_shared<const GroebnerBasis>(alg, order, std::move(out));
}

LeftIdeal::LeftIdeal(AlgebraPtr alg, std::vector<OrePoly> gens) : alg_(std::move(alg)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    require_same_algebra(g, OrePoly(alg_));
    gens_.push_back(std::move(g));
  }
}

GBPtr LeftIdeal::groebner(const MonomialOrder& order) const {
  std::lock_guard lock(cache_->mutex);
  for (const auto& [o, gb] : cache_->entries)
    if (o == order) return gb;
  GBPtr gb = buchberger(alg_, gens_, order);
  cache_->entries.emplace_back(order, gb);
  return gb;
}

OrePoly normal_form(const OrePoly& f, const GroebnerBasis& G) { return G.normal_form(f); }

bool is_member(const OrePoly& f, const LeftIdeal& I, const MonomialOrder& order) {
  return I.groebner(order)->normal_form(f).is_zero();
}

bool same_ideal(const LeftIdeal& a, const LeftIdeal& b, const MonomialOrder& order) {
  for (const auto& g : a.generators())
    if (!is_member(g, b, order)) return false;
  for (const auto& g : b.generators())
    if (!is_member(g, a, order)) return false;
  return true;
}

const OrePoly& NormalFormTable::of(const Exponents& alpha) {
  auto it = memo_.find(alpha);
  if (it != memo_.end()) return it->second;
  OrePoly value;
  if (alpha.is_zero()) {
    value = gb_->normal_form(OrePoly(gb_->algebra(), RatFunc(1)));
  } else {
    std::size_t g = 0;
    while (alpha[g] == 0) ++g;
    Exponents prev = alpha;
    prev[g] -= 1;
    value = gb_->normal_form(of(prev).left_mul_generator(g));
  }
  return memo_.emplace(alpha, std::move(value)).first->second;
}

std::vector<Exponents> monomials_up_to(std::uint32_t mask, unsigned s) {
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (mask & (1u << i)) vars.push_back(i);
  std::vector<Exponents> out{Exponents{}};
  std::vector<Exponents> layer{Exponents{}};
  for (unsigned d = 1; d <= s; ++d) {
    std::set<std::vector<std::uint16_t>> seen;
    std::vector<Exponents> next;
    for (const auto& e : layer)
      for (auto v : vars) {
        Exponents f = e;
        f[v] += 1;
        if (seen.insert(std::vector<std::uint16_t>(f.e.begin(), f.e.end())).second) next.push_back(f);
      }
    std::sort(next.begin(), next.end(), [](const Exponents& a, const Exponents& b) { return grevlex_cmp(a, b) < 0; });
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::vector<Exponents> monomials_up_to(std::size_t n, unsigned s) { return monomials_up_to(all_vars_mask(n), s); }

}  // namespace orealg
