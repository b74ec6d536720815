#include "orealg/ore/orepoly.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "orealg/arith/gcd.hpp"
#include "orealg/error.hpp"

namespace orealg {

namespace {

using Term = OrePoly::Term;

bool term_greater(const Term& a, const Term& b) { return grevlex_cmp(a.exp, b.exp) > 0; }

/// Merges two sorted term lists, combining equal exponents.
std::vector<Term> merge(std::vector<Term> a, std::vector<Term> b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = (i == a.size()) ? -1 : (j == b.size()) ? 1 : grevlex_cmp(a[i].exp, b[j].exp);
    if (c > 0) {
      out.push_back(std::move(a[i++]));
    } else if (c < 0) {
      if (subtract) b[j].coeff = -b[j].coeff;
      out.push_back(std::move(b[j++]));
    } else {
      RatFunc s = subtract ? a[i].coeff - b[j].coeff : a[i].coeff + b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].exp, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

OrePoly::OrePoly(AlgebraPtr alg, const RatFunc& c) : alg_(std::move(alg)) {
  if (!c.is_zero()) terms_.push_back({Exponents{}, c});
}

OrePoly OrePoly::generator(AlgebraPtr alg, std::size_t i) {
  if (i >= alg->size()) throw Error(ErrorCode::UnknownVariable, "generator index out of range");
  return monomial(std::move(alg), Exponents::unit(i));
}

OrePoly OrePoly::monomial(AlgebraPtr alg, const Exponents& e, const RatFunc& c) {
  OrePoly p(std::move(alg));
  if (!c.is_zero()) p.terms_.push_back({e, c});
  return p;
}

OrePoly OrePoly::from_terms(AlgebraPtr alg, std::vector<Term> terms) {
  OrePolyBuilder b(std::move(alg));
  for (auto& t : terms) b.add(t.exp, t.coeff);
  return b.build();
}

RatFunc OrePoly::coefficient(const Exponents& e) const {
  for (const auto& t : terms_)
    if (t.exp == e) return t.coeff;
  return RatFunc();
}

std::uint32_t OrePoly::coeff_var_mask() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_) m |= t.coeff.var_mask();
  return m;
}

std::uint32_t OrePoly::generator_mask() const {
  std::uint32_t m = 0;
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (t.exp[i]) m |= 1u << i;
  return m;
}

void require_same_algebra(const OrePoly& a, const OrePoly& b) {
  if (!a.algebra() || !b.algebra()) return;
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra()))
    throw Error(ErrorCode::AlgebraMismatch, "operands belong to different algebras");
}

OrePoly OrePoly::operator-() const {
  OrePoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

OrePoly& OrePoly::operator+=(const OrePoly& o) {
  require_same_algebra(*this, o);
  if (!alg_) alg_ = o.alg_;
  if (o.terms_.empty()) return *this;
  terms_ = merge(std::move(terms_), o.terms_, false);
  return *this;
}

OrePoly& OrePoly::operator-=(const OrePoly& o) {
  require_same_algebra(*this, o);
  if (!alg_) alg_ = o.alg_;
  if (o.terms_.empty()) return *this;
  terms_ = merge(std::move(terms_), o.terms_, true);
  return *this;
}

OrePoly operator*(const RatFunc& c, const OrePoly& a) {
  OrePoly r(a.alg_);
  if (c.is_zero()) return r;
  r.terms_.reserve(a.terms_.size());
  for (const auto& t : a.terms_) r.terms_.push_back({t.exp, c * t.coeff});
  return r;
}

OrePoly OrePoly::left_mul_generator(std::size_t i) const {
  const OreAlgebra& alg = *alg_;
  std::vector<Term> shifted, derived;
  shifted.reserve(terms_.size());
  bool has_delta = !alg.delta_is_zero(i);
  for (const auto& t : terms_) {
    Exponents e = t.exp;
    e[i] += 1;
    shifted.push_back({e, alg.sigma(i, t.coeff)});
    if (has_delta) {
      RatFunc d = alg.delta(i, t.coeff);
      if (!d.is_zero()) derived.push_back({t.exp, std::move(d)});
    }
  }
  OrePoly r(alg_);
  r.terms_ = derived.empty() ? std::move(shifted) : merge(std::move(shifted), std::move(derived), false);
  return r;
}

OrePoly OrePoly::left_mul_monomial(const Exponents& e) const {
  OrePoly r = *this;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    for (unsigned k = 0; k < e[i]; ++k) r = r.left_mul_generator(i);
  return r;
}

OrePoly operator*(const OrePoly& a, const OrePoly& b) {
  require_same_algebra(a, b);
  AlgebraPtr alg = a.alg_ ? a.alg_ : b.alg_;
  if (a.is_zero() || b.is_zero()) return OrePoly(alg);
  std::unordered_map<Exponents, OrePoly, ExponentsHash> memo;
  memo.emplace(Exponents{}, b);
  // d^e * b built from a smaller exponent by one generator step.
  std::function<const OrePoly&(const Exponents&)> get = [&](const Exponents& e) -> const OrePoly& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    std::size_t i = 0;
    while (e[i] == 0) ++i;
    Exponents prev = e;
    prev[i] -= 1;
    OrePoly v = get(prev).left_mul_generator(i);
    return memo.emplace(e, std::move(v)).first->second;
  };
  OrePolyBuilder out(alg);
  for (const auto& t : a.terms_) out.add(get(t.exp), t.coeff);
  return out.build();
}

bool operator==(const OrePoly& a, const OrePoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].exp == b.terms_[i].exp) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

OrePoly OrePoly::primitive() const {
  if (terms_.empty()) return *this;
  MPoly den(1);
  for (const auto& t : terms_) den = poly_lcm(den, t.coeff.den());
  std::vector<MPoly> nums;
  MPoly g;
  for (const auto& t : terms_) {
    nums.push_back(*MPoly::divexact(t.coeff.num() * den, t.coeff.den()));
    g = g.is_zero() ? nums.back().monic() : poly_gcd(g, nums.back());
  }
  Integer cn = 0, cd = 1;
  for (auto& p : nums) {
    p = *MPoly::divexact(p, g);
    for (const auto& t : p.terms()) {
      mpz_gcd(cn.get_mpz_t(), cn.get_mpz_t(), t.coeff.get_num_mpz_t());
      mpz_lcm(cd.get_mpz_t(), cd.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
  }
  Rational scale(cd, cn);
  scale.canonicalize();
  if (sgn(nums.front().lead_coeff()) < 0) scale = -scale;
  OrePoly r(alg_);
  for (std::size_t i = 0; i < terms_.size(); ++i) r.terms_.push_back({terms_[i].exp, RatFunc(nums[i] * scale)});
  return r;
}

std::string OrePoly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& names = alg_->field_names();
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < alg_->size(); ++i) {
      if (!t.exp[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += alg_->generator(i).name;
      if (t.exp[i] > 1) mono += "^" + std::to_string(t.exp[i]);
    }
    RatFunc c = t.coeff;
    bool neg = false;
    // Pull the sign out only for single-term numerators.
    if (c.num().size() == 1 && sgn(c.num().lead_coeff()) < 0) {
      neg = true;
      c = -c;
    }
    std::string cs = c.to_string(names);
    bool compound = c.num().size() > 1 || !c.den().is_one();
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    first = false;
    if (mono.empty()) {
      out += compound && !c.den().is_one() ? "(" + cs + ")" : cs;
    } else if (c.is_one()) {
      out += mono;
    } else {
      out += (compound ? "(" + cs + ")" : cs) + "*" + mono;
    }
  }
  return out;
}

void OrePolyBuilder::add(const Exponents& e, const RatFunc& c) {
  if (!c.is_zero()) pending_.push_back({e, c});
}

void OrePolyBuilder::add(const OrePoly& p, const RatFunc& scale) {
  if (scale.is_zero()) return;
  if (!alg_) alg_ = p.algebra();
  for (const auto& t : p.terms()) pending_.push_back({t.exp, scale.is_one() ? t.coeff : scale * t.coeff});
}

OrePoly OrePolyBuilder::build() {
  std::stable_sort(pending_.begin(), pending_.end(), term_greater);
  OrePoly r(alg_);
  for (std::size_t i = 0; i < pending_.size();) {
    std::size_t j = i + 1;
    RatFunc acc = std::move(pending_[i].coeff);
    while (j < pending_.size() && pending_[j].exp == pending_[i].exp) acc += pending_[j++].coeff;
    if (!acc.is_zero()) r.terms_.push_back({pending_[i].exp, std::move(acc)});
    i = j;
  }
  pending_.clear();
  return r;
}

namespace {

/// Expands prod_{u in gens} (d_u + shift)^{e_u} keeping the other exponents.
OrePoly binomial_map(const OrePoly& f, const std::vector<std::size_t>& gens, const AlgebraPtr& target, long shift) {
  OrePolyBuilder out(target);
  for (const auto& t : f.terms()) {
    std::vector<std::pair<Exponents, Integer>> acc{{t.exp, Integer(1)}};
    for (auto u : gens) {
      std::vector<std::pair<Exponents, Integer>> next;
      for (const auto& [e, c] : acc) {
        unsigned a = e[u];
        Integer binom = 1;
        for (unsigned b = 0; b <= a; ++b) {
          // term binom(a,b) * shift^(a-b) * d_u^b
          Integer s;
          mpz_pow_ui(s.get_mpz_t(), Integer(shift).get_mpz_t(), a - b);
          Exponents ne = e;
          ne[u] = static_cast<std::uint16_t>(b);
          next.emplace_back(ne, c * binom * s);
          binom = binom * (a - b) / (b + 1);
        }
      }
      acc = std::move(next);
    }
    for (const auto& [e, c] : acc)
      if (c != 0) out.add(e, RatFunc(Rational(c)) * t.coeff);
  }
  return out.build();
}

void require_kind(const OreAlgebra& alg, const std::vector<std::size_t>& gens, OreKind kind) {
  for (auto g : gens)
    if (alg.generator(g).kind != kind)
      throw Error(ErrorCode::KindMismatch, alg.generator(g).name + " must have kind " + std::string(to_string(kind)));
}

}  // namespace

OrePoly shift_to_difference(const OrePoly& f, const std::vector<std::size_t>& gens, const AlgebraPtr& target) {
  require_kind(*f.algebra(), gens, OreKind::Shift);
  require_kind(*target, gens, OreKind::Difference);
  return binomial_map(f, gens, target, 1);
}

OrePoly difference_to_shift(const OrePoly& f, const std::vector<std::size_t>& gens, const AlgebraPtr& target) {
  require_kind(*f.algebra(), gens, OreKind::Difference);
  require_kind(*target, gens, OreKind::Shift);
  return binomial_map(f, gens, target, -1);
}

}  // namespace orealg
