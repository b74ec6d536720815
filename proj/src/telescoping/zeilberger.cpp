#include <algorithm>
#include <map>

#include "orealg/arith/gcd.hpp"
#include "orealg/error.hpp"
#include "orealg/telescoping/telescoping.hpp"
#include "../growth/growth_internal.hpp"
#include "telescoping_internal.hpp"

namespace orealg {

namespace {

using telescoping_detail::RowCollector;
using Op = CoupledSystem::Op;

CoupledSystem build_system(const GBPtr& G, NormalFormTable& table, std::size_t ti, unsigned deg_a, unsigned deg_b) {
  const AlgebraPtr& alg = G->algebra();
  const bool difference_form = alg->generator(ti).kind == OreKind::Shift;
  CoupledSystem sys;
  for (const auto& e : monomials_up_to(alg->size(), deg_a))
    if (e[ti] == 0) sys.a_support.push_back(e);
  for (const auto& e : monomials_up_to(alg->size(), deg_b))
    if (!G->is_reducible(e)) sys.b_support.push_back(e);

  std::map<Exponents, std::size_t> index;
  for (const auto& e : sys.b_support) {
    index.emplace(e, sys.equation_support.size());
    sys.equation_support.push_back(e);
  }
  sys.square_count = sys.equation_support.size();
  for (const auto& e : monomials_up_to(alg->size(), std::max(deg_a, deg_b + 1)))
    if (!G->is_reducible(e) && index.emplace(e, sys.equation_support.size()).second) sys.equation_support.push_back(e);
  sys.equations.resize(sys.equation_support.size());

  auto row_of = [&](const Exponents& g) -> std::vector<CoupledSystem::Entry>& {
    auto [it, fresh] = index.emplace(g, sys.equation_support.size());
    if (fresh) {
      sys.equation_support.push_back(g);
      sys.equations.emplace_back();
    }
    return sys.equations[it->second];
  };
  for (std::size_t a = 0; a < sys.a_support.size(); ++a)
    for (const auto& t : table.of(sys.a_support[a]).terms()) row_of(t.exp).push_back({false, a, Op::Identity, t.coeff});
  for (std::size_t b = 0; b < sys.b_support.size(); ++b) {
    const Exponents& beta = sys.b_support[b];
    for (const auto& t : table.of(beta + Exponents::unit(ti)).terms())
      row_of(t.exp).push_back({true, b, Op::Sigma, t.coeff});
    if (difference_form)
      row_of(beta).push_back({true, b, Op::Identity, RatFunc(-1)});
    else if (!alg->delta_is_zero(ti))
      row_of(beta).push_back({true, b, Op::Delta, RatFunc(1)});
  }
  return sys;
}

// Denominator for the B ansatz: squarefree lcm of the t-dependent
// denominators of all system coefficients, with sigma-shifts -r..r (powers for
// generators whose sigma is the identity).
MPoly ansatz_denominator(const OreAlgebra& alg, const CoupledSystem& sys, std::size_t ti, std::uint32_t t_mask,
                         unsigned r) {
  using growth_detail::t_lcm;
  using growth_detail::t_primitive;
  MPoly d0(1);
  for (const auto& eq : sys.equations)
    for (const auto& e : eq)
      if (e.coeff.den().degree_in(t_mask) > 0) d0 = t_lcm(d0, t_primitive(e.coeff.den(), t_mask), t_mask);
  if (d0.is_constant()) return d0;
  d0 = squarefree_part(d0, t_mask);
  MPoly d = d0;
  if (alg.sigma_is_identity(ti)) {
    for (unsigned j = 0; j < r; ++j) d *= d0;
    return d;
  }
  RatFunc up(d0), down(d0);
  for (unsigned j = 0; j < r; ++j) {
    up = alg.sigma(ti, up);
    down = alg.sigma_inverse(ti, down);
    d = t_lcm(d, t_lcm(up.num(), down.num(), t_mask), t_mask);
  }
  return d;
}

RatFunc apply_op(const OreAlgebra& alg, std::size_t ti, Op op, const RatFunc& f) {
  switch (op) {
    case Op::Identity:
      return f;
    case Op::Sigma:
      return alg.sigma(ti, f);
    case Op::Delta:
      return alg.delta(ti, f);
  }
  return f;
}

}  // namespace

ZeilbergerOutcome zeilberger_search(const LeftIdeal& I, std::uint32_t t_mask, unsigned deg_a, unsigned deg_b,
                                    const ZeilbergerOptions& opt) {
  const AlgebraPtr& alg = I.algebra();
  const auto t_gens = t_generators(*alg, t_mask);
  if (t_gens.size() != 1 || __builtin_popcount(t_mask) != 1)
    throw Error(ErrorCode::MultipleTelescopingVars, "the ansatz needs exactly one summation variable");
  const std::size_t ti = t_gens[0];
  const std::size_t tv = alg->generator(ti).var;
  GBPtr G = I.groebner(opt.order);
  NormalFormTable table(G);

  ZeilbergerOutcome out;
  out.system = build_system(G, table, ti, deg_a, deg_b);
  const CoupledSystem& sys = out.system;

  const MPoly d = ansatz_denominator(*alg, sys, ti, t_mask, opt.denom_bound);
  const unsigned top = d.degree_in(t_mask) + opt.denom_bound;
  std::vector<RatFunc> basis;  // t^j / d
  for (unsigned j = 0; j <= top; ++j) basis.emplace_back(MPoly::variable(tv).pow(j), d);
  const std::size_t na = sys.a_support.size();
  const std::size_t cols = na + sys.b_support.size() * basis.size();
  out.ansatz_columns = cols;
  auto col_of = [&](const CoupledSystem::Entry& e, std::size_t j) { return e.is_b ? na + e.unknown * basis.size() + j : e.unknown; };

  std::map<Op, std::vector<RatFunc>> images;
  for (Op op : {Op::Identity, Op::Sigma, Op::Delta})
    for (const auto& f : basis) images[op].push_back(apply_op(*alg, ti, op, f));

  auto rows_for = [&](std::size_t lo, std::size_t hi) {
    return [&, lo, hi](std::span<const Rational> point) {
      auto at = [&](const RatFunc& c) { return (c.var_mask() & t_mask) ? c.evaluate(t_mask, point) : c; };
      std::map<Op, std::vector<RatFunc>> img;
      for (const auto& [op, fs] : images)
        for (const auto& f : fs) img[op].push_back(at(f));
      std::vector<SparseRow> rows;
      for (std::size_t q = lo; q < hi; ++q) {
        std::map<std::size_t, RatFunc> acc;
        for (const auto& e : sys.equations[q]) {
          RatFunc c = at(e.coeff);
          if (!e.is_b) {
            acc[col_of(e, 0)] = acc[col_of(e, 0)] + c;
            continue;
          }
          for (std::size_t j = 0; j < basis.size(); ++j) acc[col_of(e, j)] = acc[col_of(e, j)] + c * img[e.op][j];
        }
        SparseRow row;
        for (auto& [c, v] : acc)
          if (!v.is_zero()) row.emplace_back(c, std::move(v));
        rows.push_back(std::move(row));
      }
      return rows;
    };
  };
  RowCollector square(cols, t_mask, opt.seed, rows_for(0, sys.square_count));
  RowCollector constraints(cols, t_mask, opt.seed + 1, rows_for(sys.square_count, sys.equations.size()));

  const CertificateForm form = alg->generator(ti).kind == OreKind::Shift ? CertificateForm::Difference
                                                                          : CertificateForm::Operator;
  auto assemble = [&](const Vector& v) {
    TelescopingResult r;
    r.t_gens = {ti};
    r.form = form;
    r.method = SearchMethod::Zeilberger;
    r.degree = deg_a;
    OrePolyBuilder A(alg), B(alg);
    for (std::size_t a = 0; a < na; ++a)
      if (!v[a].is_zero()) A.add(sys.a_support[a], v[a]);
    for (std::size_t b = 0; b < sys.b_support.size(); ++b) {
      RatFunc c;
      for (std::size_t j = 0; j < basis.size(); ++j) c = c + v[na + b * basis.size() + j] * basis[j];
      if (!c.is_zero()) B.add(sys.b_support[b], c);
    }
    r.telescoper = A.build();
    r.certificates = {B.build()};
    return r;
  };

  for (int retry = 0;; ++retry) {
    square.saturate(retry ? 4 : 2);
    constraints.saturate(retry ? 4 : 2);
    std::vector<SparseRow> rows = square.rows();
    rows.insert(rows.end(), constraints.rows().begin(), constraints.rows().end());
    auto kernel = nullspace(rows, cols, opt.seed);
    bool all_ok = true;
    std::vector<TelescopingResult> found;
    for (const auto& v : kernel) {
      TelescopingResult r = assemble(v);
      OrePoly w = telescoping_detail::attach(r.telescoper, r.t_gens, r.certificates, r.form);
      if (!G->normal_form(w).is_zero()) {
        all_ok = false;
        break;
      }
      if (!r.telescoper.is_zero()) found.push_back(std::move(r));
    }
    if (!all_ok) {
      if (retry == 3) throw Error(ErrorCode::Unsupported, "t-evaluation did not determine the coupled system");
      continue;
    }
    if (found.empty()) return out;
    auto best = std::min_element(found.begin(), found.end(), [](const TelescopingResult& x, const TelescopingResult& y) {
      const OrePoly &a = x.telescoper, &b = y.telescoper;
      if (a.degree() != b.degree()) return a.degree() < b.degree();
      if (a.size() != b.size()) return a.size() < b.size();
      return a.terms().front().exp < b.terms().front().exp;
    });
    TelescopingResult r = std::move(*best);
    telescoping_detail::normalize_and_verify(r, I, opt.order);
    out.result = std::move(r);
    return out;
  }
}

}  // namespace orealg
