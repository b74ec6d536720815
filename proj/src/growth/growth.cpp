#include <algorithm>
#include <cmath>

#include "orealg/arith/gcd.hpp"
#include "orealg/dimension/dimension.hpp"
#include "orealg/error.hpp"
#include "orealg/growth/growth.hpp"
#include "growth_internal.hpp"

namespace orealg {

std::string_view to_string(GrowthMethod m) {
  switch (m) {
    case GrowthMethod::LcmRecurrence:
      return "lcm-recurrence";
    case GrowthMethod::HolonomicLPower:
      return "holonomic-L-power";
    case GrowthMethod::EmpiricalProbe:
      return "empirical-probe";
    case GrowthMethod::UserSupplied:
      return "user-supplied";
  }
  return "?";
}

std::uint32_t field_mask(const OreAlgebra& alg, const std::vector<std::string>& t) {
  std::uint32_t m = 0;
  for (const auto& name : t) {
    auto i = alg.field_index(name);
    if (!i) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'");
    m |= 1u << *i;
  }
  return m;
}

namespace growth_detail {

MPoly t_primitive(const MPoly& p, std::uint32_t t_mask) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "t-primitive part of zero");
  if (p.degree_in(t_mask) == 0) return MPoly(1);
  MPoly c = content_in(p, t_mask);
  MPoly q = c.is_constant() ? p : *MPoly::divexact(p, c);
  return q.monic();
}

MPoly t_lcm(const MPoly& a, const MPoly& b, std::uint32_t t_mask) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  return t_primitive(poly_lcm(a, b), t_mask);
}

}  // namespace growth_detail

using growth_detail::t_lcm;
using growth_detail::t_primitive;

GrowthFit fit_growth_exponent(const std::vector<unsigned>& degrees) {
  GrowthFit fit;
  if (degrees.size() < 3) return fit;
  std::size_t start = degrees.size() / 2;
  std::vector<long long> v(degrees.begin() + static_cast<long>(start), degrees.end());
  for (unsigned r = 0; v.size() >= 2; ++r) {
    if (std::all_of(v.begin(), v.end(), [&](long long x) { return x == v[0]; })) {
      if (r == 0 || v[0] > 0) {
        fit.p = r;
        fit.exact = true;
      }
      return fit;
    }
    std::vector<long long> w;
    for (std::size_t i = 0; i + 1 < v.size(); ++i) w.push_back(v[i + 1] - v[i]);
    v = std::move(w);
  }
  // No exact stabilization: round the log-log slope over the window.
  double s0 = static_cast<double>(start), s1 = static_cast<double>(degrees.size() - 1);
  double d0 = degrees[start] + 1.0, d1 = degrees.back() + 1.0;
  if (s0 < 1 || s1 <= s0) return fit;
  double slope = std::log(d1 / d0) / std::log(s1 / s0);
  fit.p = static_cast<unsigned>(std::max(0.0, std::round(slope)));
  return fit;
}

namespace {

enum class DDType { Difference, Derivation };

// Classifies each generator; throws NotDifferenceDifferential.
std::vector<DDType> classify(const OreAlgebra& alg, std::uint32_t t_mask) {
  std::vector<DDType> out;
  for (std::size_t i = 0; i < alg.size(); ++i) {
    const auto& g = alg.generator(i);
    switch (g.kind) {
      case OreKind::Shift:
      case OreKind::QDilation:
      case OreKind::QShift:
        out.push_back(DDType::Difference);
        break;
      case OreKind::Mahler:
        if (t_mask & (1u << g.var))
          throw Error(ErrorCode::NotDifferenceDifferential, "Mahler generator " + g.name + " changes t-degrees");
        out.push_back(DDType::Difference);
        break;
      case OreKind::Differentiation:
      case OreKind::Euler:
        out.push_back(DDType::Derivation);
        break;
      default:
        throw Error(ErrorCode::NotDifferenceDifferential,
                    "generator " + g.name + " of kind " + std::string(to_string(g.kind)) +
                        " has both a nontrivial sigma and delta");
    }
  }
  return out;
}

// Moves an ideal over Difference generators to the shift algebra.
LeftIdeal to_shift_form(const LeftIdeal& I) {
  const AlgebraPtr& alg = I.algebra();
  std::vector<std::size_t> diff;
  for (std::size_t i = 0; i < alg->size(); ++i)
    if (alg->generator(i).kind == OreKind::Difference) diff.push_back(i);
  if (diff.empty()) return I;
  AlgebraPtr target = alg->with_kind(diff, OreKind::Shift);
  std::vector<OrePoly> gens;
  for (const auto& g : I.generators()) gens.push_back(difference_to_shift(g, diff, target));
  return LeftIdeal(target, std::move(gens));
}

}  // namespace

UniformReduction uniform_reduction_data(const LeftIdeal& I0, std::uint32_t t_mask, const MonomialOrder& order) {
  LeftIdeal I = to_shift_form(I0);
  const AlgebraPtr& alg = I.algebra();
  classify(*alg, t_mask);
  GBPtr G = I.groebner(order);
  Dimension d = hilbert_dimension(*G);
  if (!d.empty && d.value != 0)
    throw Error(ErrorCode::NotZeroDimensional, "ideal has dimension " + d.to_string());

  UniformReduction ur;
  ur.L = MPoly(1);
  if (G->is_unit()) return ur;
  for (unsigned s = 0;; ++s) {
    bool any = false;
    for (const auto& e : monomials_up_to(alg->size(), s)) {
      if (e.total() != s || G->is_reducible(e)) continue;
      ur.gamma.push_back(e);
      any = true;
    }
    if (!any) break;
  }
  for (std::size_t i = 0; i < alg->size(); ++i)
    for (const auto& beta : ur.gamma) {
      OrePoly nf = G->normal_form(OrePoly::monomial(alg, beta + Exponents::unit(i)));
      for (const auto& t : nf.terms()) ur.L = t_lcm(ur.L, t_primitive(t.coeff.den(), t_mask), t_mask);
      ur.table.push_back({i, beta, std::move(nf)});
    }
  ur.ell = ur.L.degree_in(t_mask);
  long long m = 0;
  for (const auto& e : ur.table)
    for (const auto& t : e.nf.terms()) {
      long long deg = static_cast<long long>(ur.ell) - t.coeff.den().degree_in(t_mask) + t.coeff.num().degree_in(t_mask);
      m = std::max(m, deg);
    }
  ur.m = static_cast<unsigned>(m);
  return ur;
}

GrowthCertificate growth_recurrence(const LeftIdeal& I0, std::uint32_t t_mask, unsigned steps, const MonomialOrder& order) {
  LeftIdeal I = to_shift_form(I0);
  const AlgebraPtr& alg = I.algebra();
  auto types = classify(*alg, t_mask);
  UniformReduction ur = uniform_reduction_data(I, t_mask, order);
  bool has_derivation = std::find(types.begin(), types.end(), DDType::Derivation) != types.end();
  bool all_derivation = std::all_of(types.begin(), types.end(), [](DDType t) { return t == DDType::Derivation; });

  GrowthCertificate cert;
  cert.method = all_derivation ? GrowthMethod::HolonomicLPower : GrowthMethod::LcmRecurrence;
  cert.order = order;
  cert.t_mask = t_mask;
  MPoly P(1);
  cert.polys.push_back(P);
  cert.degrees.push_back(0);
  for (unsigned s = 0; s < steps; ++s) {
    MPoly next = P;
    for (std::size_t i = 0; i < alg->size(); ++i) {
      if (types[i] != DDType::Difference) continue;
      RatFunc sp = alg->sigma(i, RatFunc(P));
      next = t_lcm(next, t_primitive(ur.L * sp.num(), t_mask), t_mask);
    }
    if (has_derivation) {
      MPoly Q = P.degree_in(t_mask) == 0 ? MPoly(1) : squarefree_part(P, t_mask);
      next = t_lcm(next, t_primitive(P * t_lcm(ur.L, Q, t_mask), t_mask), t_mask);
    }
    P = std::move(next);
    cert.polys.push_back(P);
    cert.degrees.push_back(P.degree_in(t_mask));
  }
  GrowthFit fit = fit_growth_exponent(cert.degrees);
  cert.p = fit.p;
  cert.heuristic = !fit.exact;
  cert.degenerate = fit.p && *fit.p == 0;
  if (cert.degenerate) cert.note = "degrees stay bounded; the recurrence certifies no positive exponent";
  return cert;
}

}  // namespace orealg
