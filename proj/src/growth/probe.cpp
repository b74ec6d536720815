#include <map>
#include <random>

#include "orealg/error.hpp"
#include "orealg/growth/growth.hpp"
#include "growth_internal.hpp"

namespace orealg {

namespace {

using growth_detail::t_lcm;
using growth_detail::t_primitive;

struct ExpPairHash {
  std::size_t operator()(const std::pair<Exponents, Exponents>& p) const {
    ExponentsHash h;
    return h(p.first) * 1000003u ^ h(p.second);
  }
};

// Normal forms of d^alpha with every non-t field variable replaced by a
// fixed integer. Generators acting on those variables must be Shift or
// Difference, so sigma on a specialized coefficient is the same coefficient
// specialized one step further; the recursion therefore tracks an offset.
class SpecializedNormalForms {
 public:
  struct Cmp {
    const MonomialOrder* order;
    bool operator()(const Exponents& a, const Exponents& b) const { return order->compare(a, b) > 0; }
  };
  using SPoly = std::map<Exponents, RatFunc, Cmp>;

  SpecializedNormalForms(GBPtr gb, std::uint32_t t_mask, std::vector<Rational> base)
      : gb_(std::move(gb)), alg_(gb_->algebra()), t_mask_(t_mask), base_(std::move(base)) {
    for (std::size_t v = 0; v < alg_->field_size(); ++v)
      if (!(t_mask_ & (1u << v))) spec_mask_ |= 1u << v;
  }

  static bool applicable(const OreAlgebra& alg, std::uint32_t t_mask) {
    for (const auto& g : alg.generators()) {
      if (t_mask & (1u << g.var)) continue;
      if (g.kind != OreKind::Shift && g.kind != OreKind::Difference) return false;
    }
    return true;
  }

  const SPoly& of(const Exponents& alpha, const Exponents& off) {
    auto key = std::make_pair(alpha, off);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    SPoly f(Cmp{&gb_->order()});
    if (alpha.is_zero()) {
      f.emplace(Exponents{}, RatFunc(1));
    } else {
      std::size_t i = pick(alpha);
      const auto& g = alg_->generator(i);
      Exponents ei = Exponents::unit(i);
      if (t_mask_ & (1u << g.var)) {
        const SPoly prev = of(alpha - ei, off);
        for (const auto& [b, c] : prev) {
          add(f, b + ei, specialize(alg_->sigma(i, c), off));
          RatFunc d = alg_->delta(i, c);
          if (!d.is_zero()) add(f, b, specialize(d, off));
        }
      } else {
        Exponents next = off;
        next[g.var] += 1;
        const SPoly shifted = of(alpha - ei, next);
        for (const auto& [b, c] : shifted) add(f, b + ei, c);
        if (g.kind == OreKind::Difference) {
          for (const auto& [b, c] : shifted) add(f, b, c);
          const SPoly prev = of(alpha - ei, off);
          for (const auto& [b, c] : prev) add(f, b, -c);
        }
      }
    }
    reduce(f, off);
    return memo_.emplace(key, std::move(f)).first->second;
  }

 private:
  // Peel t-generators first so offsets stay small.
  std::size_t pick(const Exponents& alpha) const {
    for (std::size_t i = 0; i < alg_->size(); ++i)
      if (alpha[i] && (t_mask_ & (1u << alg_->generator(i).var))) return i;
    for (std::size_t i = 0;; ++i)
      if (alpha[i]) return i;
  }

  static void add(SPoly& f, const Exponents& e, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = f.try_emplace(e, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) f.erase(it);
    }
  }

  RatFunc specialize(const RatFunc& c, const Exponents& off) const {
    if (c.num().is_constant() && c.den().is_constant()) return c;
    std::vector<Rational> vals(kMaxVars);
    for (std::size_t v = 0; v < alg_->field_size(); ++v)
      if (spec_mask_ & (1u << v)) vals[v] = base_[v] + off[v];
    return c.evaluate(spec_mask_, vals);
  }

  const SPoly& multiple(std::size_t j, const Exponents& gamma, const Exponents& off) {
    auto key = std::make_tuple(j, gamma, off);
    if (auto it = mult_.find(key); it != mult_.end()) return it->second;
    SPoly s(Cmp{&gb_->order()});
    for (const auto& t : gb_->multiple(j, gamma).terms()) s.emplace(t.exp, specialize(t.coeff, off));
    return mult_.emplace(key, std::move(s)).first->second;
  }

  void reduce(SPoly& f, const Exponents& off) {
    auto it = f.begin();
    while (it != f.end()) {
      auto j = gb_->reducer(it->first);
      if (!j) {
        ++it;
        continue;
      }
      Exponents e = it->first;
      RatFunc c = it->second;
      f.erase(it);
      const SPoly& m = multiple(*j, e - gb_->staircase()[*j], off);
      for (const auto& [b, x] : m)
        if (!(b == e)) add(f, b, -(c * x));
      it = f.upper_bound(e);
    }
  }

  GBPtr gb_;
  AlgebraPtr alg_;
  std::uint32_t t_mask_;
  std::uint32_t spec_mask_ = 0;
  std::vector<Rational> base_;
  std::unordered_map<std::pair<Exponents, Exponents>, SPoly, ExpPairHash> memo_;
  std::map<std::tuple<std::size_t, Exponents, Exponents>, SPoly> mult_;
};

// Running clearing data: D = lcm of t-denominators and the largest excess
// deg_t(num) - deg_t(den) over all coefficients seen.
struct Clearing {
  MPoly D = MPoly(1);
  long long excess = 0;
  std::uint32_t t_mask;

  void absorb(const RatFunc& c) {
    D = t_lcm(D, t_primitive(c.den(), t_mask), t_mask);
    excess = std::max<long long>(excess, static_cast<long long>(c.num().degree_in(t_mask)) - c.den().degree_in(t_mask));
  }
  unsigned degree() const {
    long long d = D.degree_in(t_mask);
    return static_cast<unsigned>(std::max(d, d + excess));
  }
};

GrowthCertificate finish(GrowthCertificate cert) {
  GrowthFit fit = fit_growth_exponent(cert.degrees);
  cert.p = fit.p;
  cert.heuristic = true;
  cert.degenerate = fit.p && *fit.p == 0;
  if (!fit.exact) cert.note += (cert.note.empty() ? "" : "; ") + std::string("exponent from log-log slope");
  return cert;
}

}  // namespace

GrowthCertificate growth_probe(const LeftIdeal& I, std::uint32_t t_mask, unsigned steps, const ProbeOptions& opt) {
  const AlgebraPtr& alg = I.algebra();
  GBPtr G = I.groebner(opt.order);
  GrowthCertificate cert;
  cert.method = GrowthMethod::EmpiricalProbe;
  cert.order = opt.order;
  cert.t_mask = t_mask;
  const auto monos = monomials_up_to(alg->size(), steps);

  if (opt.allow_specialization && SpecializedNormalForms::applicable(*alg, t_mask)) {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<long> dist(1000, 1000000);
    for (int attempt = 0; attempt < 4; ++attempt) {
      std::vector<Rational> base(alg->field_size());
      for (auto& b : base) b = Rational(dist(rng));
      try {
        SpecializedNormalForms nf(G, t_mask, base);
        Clearing cl{MPoly(1), 0, t_mask};
        cert.degrees.clear();
        std::size_t k = 0;
        for (unsigned s = 0; s <= steps; ++s) {
          for (; k < monos.size() && monos[k].total() <= s; ++k)
            for (const auto& [e, c] : nf.of(monos[k], Exponents{})) cl.absorb(c);
          cert.degrees.push_back(cl.degree());
        }
        cert.note = "non-t variables specialized at random integers";
        return finish(std::move(cert));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DenominatorVanishes) throw;
      }
    }
  }

  NormalFormTable table(G);
  Clearing cl{MPoly(1), 0, t_mask};
  std::size_t k = 0;
  for (unsigned s = 0; s <= steps; ++s) {
    for (; k < monos.size() && monos[k].total() <= s; ++k)
      for (const auto& t : table.of(monos[k]).terms()) cl.absorb(t.coeff);
    cert.degrees.push_back(cl.degree());
  }
  cert.note = "exact normal forms";
  return finish(std::move(cert));
}

}  // namespace orealg
