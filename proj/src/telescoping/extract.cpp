#include <algorithm>

#include "orealg/error.hpp"
#include "orealg/telescoping/telescoping.hpp"
#include "telescoping_internal.hpp"

namespace orealg {

TelescopingBound telescoping_bound(unsigned d, unsigned p, unsigned t_count, unsigned x_count) {
  TelescopingBound b;
  b.bound = static_cast<long long>(d) + (static_cast<long long>(p) - 1) * t_count;
  b.nontrivial = b.bound >= 0 && b.bound < static_cast<long long>(x_count);
  return b;
}

std::string_view to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::Fasenmyer:
      return "fasenmyer";
    case SearchMethod::Zeilberger:
      return "zeilberger";
    case SearchMethod::Direct:
      return "direct";
  }
  return "?";
}

std::string_view to_string(CertificateForm f) { return f == CertificateForm::Difference ? "difference" : "operator"; }

std::vector<std::size_t> t_generators(const OreAlgebra& alg, std::uint32_t t_mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < alg.size(); ++i)
    if (t_mask & (1u << alg.generator(i).var)) out.push_back(i);
  return out;
}

AlgebraPtr x_subalgebra(const AlgebraPtr& alg, std::uint32_t t_mask) {
  std::vector<std::string> ground(alg->field_names().begin(), alg->field_names().begin() + alg->ground_count());
  std::vector<std::string> params(alg->field_names().begin() + alg->ground_count(), alg->field_names().end());
  std::vector<OreGeneratorSpec> gens;
  for (const auto& g : alg->generators())
    if (!(t_mask & (1u << g.var))) gens.push_back(g);
  return make_algebra(std::move(ground), std::move(params), std::move(gens));
}

OrePoly to_x_subalgebra(const OrePoly& f, const AlgebraPtr& sub, std::uint32_t t_mask) {
  const AlgebraPtr& alg = f.algebra();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < alg->size(); ++i)
    if (!(t_mask & (1u << alg->generator(i).var))) keep.push_back(i);
  OrePolyBuilder b(sub);
  for (const auto& t : f.terms()) {
    Exponents e;
    for (std::size_t j = 0; j < keep.size(); ++j) e[j] = t.exp[keep[j]];
    if (e.total() != t.exp.total()) throw Error(ErrorCode::OutOfDomain, "operator involves a t-generator");
    b.add(e, t.coeff);
  }
  return b.build();
}

namespace telescoping_detail {

RightDivision right_divide(const OrePoly& E, const std::vector<std::size_t>& t_gens) {
  const AlgebraPtr& alg = E.algebra();
  RightDivision out;
  OrePolyBuilder rem(alg);
  std::vector<OrePolyBuilder> quo(t_gens.size(), OrePolyBuilder(alg));
  OrePoly work = E;
  while (!work.is_zero()) {
    const auto t = work.terms().front();
    std::size_t k = 0;
    while (k < t_gens.size() && t.exp[t_gens[k]] == 0) ++k;
    OrePoly next(alg);
    if (k == t_gens.size()) {
      rem.add(t.exp, t.coeff);
    } else {
      // c d^g = d_i (u d^(g - e_i)) - delta_i(u) d^(g - e_i), u = sigma_i^-1(c).
      std::size_t i = t_gens[k];
      Exponents rest = t.exp - Exponents::unit(i);
      RatFunc u = alg->sigma_inverse(i, t.coeff);
      quo[k].add(rest, u);
      RatFunc du = alg->delta(i, u);
      if (!du.is_zero()) next = OrePoly::monomial(alg, rest, -du);
    }
    work = work - OrePoly::monomial(alg, t.exp, t.coeff) + next;
  }
  out.remainder = rem.build();
  for (auto& q : quo) out.quotients.push_back(q.build());
  return out;
}

OrePoly attach(const OrePoly& A, const std::vector<std::size_t>& t_gens, const std::vector<OrePoly>& certs,
               CertificateForm form) {
  const AlgebraPtr& alg = A.algebra();
  OrePoly w = A;
  for (std::size_t k = 0; k < t_gens.size(); ++k) {
    if (certs[k].is_zero()) continue;
    OrePoly D = OrePoly::generator(alg, t_gens[k]);
    if (form == CertificateForm::Difference) D = D - OrePoly(alg, RatFunc(1));
    w += D * certs[k];
  }
  return w;
}

void normalize_and_verify(TelescopingResult& r, const LeftIdeal& I, const MonomialOrder& order) {
  OrePoly prim = r.telescoper.primitive();
  const auto& lead = prim.terms().front();
  RatFunc scale = lead.coeff / r.telescoper.coefficient(lead.exp);
  r.telescoper = std::move(prim);
  for (auto& q : r.certificates) q = scale * q;
  r.witness = attach(r.telescoper, r.t_gens, r.certificates, r.form);
  r.verified = is_member(r.witness, I, order);
  if (!r.verified) throw Error(ErrorCode::Unsupported, "telescoping witness failed the membership check");
}

}  // namespace telescoping_detail

using telescoping_detail::right_divide;

TelescopingResult extract_telescoper(const OrePoly& Q, const LeftIdeal& I, std::uint32_t t_mask,
                                     const MonomialOrder& order) {
  const AlgebraPtr& alg = I.algebra();
  require_same_algebra(Q, OrePoly(alg));
  if (Q.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot extract a telescoper from zero");
  if (Q.coeff_var_mask() & t_mask) throw Error(ErrorCode::OutOfDomain, "operator has t in its coefficients");
  TelescopingResult r;
  r.t_gens = t_generators(*alg, t_mask);

  std::vector<std::size_t> shifts;
  for (auto i : r.t_gens)
    if (alg->generator(i).kind == OreKind::Shift) shifts.push_back(i);
  AlgebraPtr work_alg = shifts.empty() ? alg : alg->with_kind(shifts, OreKind::Difference);
  OrePoly W = shifts.empty() ? Q : shift_to_difference(Q, shifts, work_alg);
  r.form = shifts.empty() ? CertificateForm::Operator : CertificateForm::Difference;

  auto div = right_divide(W, r.t_gens);
  if (div.remainder.is_zero()) {
    // W = sum_beta D^beta R_beta; pick beta0 of least degree and multiply by
    // prod_i a_i^beta0_i so that only R_beta0 survives modulo the D_i.
    Exponents beta0;
    bool found = false;
    for (const auto& t : W.terms()) {
      Exponents b;
      for (auto i : r.t_gens) b[i] = t.exp[i];
      if (!found || b.total() < beta0.total() || (b.total() == beta0.total() && b < beta0)) beta0 = b;
      found = true;
    }
    RatFunc m(1);
    for (auto i : r.t_gens) {
      if (beta0[i] == 0) continue;
      auto wit = telescopable_witness(*work_alg, i, r.t_gens);
      if (!wit) throw Error(ErrorCode::NoTelescopableVariable, work_alg->generator(i).name + " is not telescopable");
      m = m * wit->first.pow(static_cast<int>(beta0[i]));
    }
    div = right_divide(OrePoly(work_alg, m) * W, r.t_gens);
    if (div.remainder.is_zero() || (div.remainder.coeff_var_mask() & t_mask))
      throw Error(ErrorCode::NoTelescopableVariable, "witness multiplication left no t-free remainder");
  }
  r.telescoper = shifts.empty() ? div.remainder : difference_to_shift(div.remainder, shifts, alg);
  for (auto& q : div.quotients) r.certificates.push_back(shifts.empty() ? q : difference_to_shift(q, shifts, alg));
  r.degree = Q.degree();
  telescoping_detail::normalize_and_verify(r, I, order);
  return r;
}

}  // namespace orealg
