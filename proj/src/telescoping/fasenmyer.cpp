#include <algorithm>
#include <map>

#include "orealg/error.hpp"
#include "orealg/telescoping/telescoping.hpp"
#include "telescoping_internal.hpp"

namespace orealg {

namespace {

using telescoping_detail::RowCollector;

// (degree, term count, leading exponent) of a telescoper.
bool simpler(const TelescopingResult& a, const TelescopingResult& b) {
  const OrePoly& x = a.telescoper;
  const OrePoly& y = b.telescoper;
  if (x.degree() != y.degree()) return x.degree() < y.degree();
  if (x.size() != y.size()) return x.size() < y.size();
  return x.terms().front().exp < y.terms().front().exp;
}

bool within(const Dimension& d, unsigned target) { return d.empty || d.value <= target; }

}  // namespace

FasenmyerOutcome fasenmyer_search(const LeftIdeal& I, std::uint32_t t_mask, const FasenmyerOptions& opt) {
  const AlgebraPtr& alg = I.algebra();
  const auto t_gens = t_generators(*alg, t_mask);
  if (t_gens.empty()) throw Error(ErrorCode::NoTelescopableVariable, "no generator acts on the summation variables");
  const auto started = std::chrono::steady_clock::now();
  GBPtr G = I.groebner(opt.order);
  AlgebraPtr sub = x_subalgebra(alg, t_mask);

  FasenmyerOutcome out;
  out.dimension = Dimension{false, static_cast<unsigned>(sub->size())};
  if (G->is_unit()) {
    out.trivial = true;
    out.results.push_back(extract_telescoper(OrePoly(alg, RatFunc(1)), I, t_mask, opt.order));
    out.dimension = Dimension::of_unit();
    out.target_met = true;
    return out;
  }

  NormalFormTable table(G);
  std::vector<OrePoly> found;  // telescopers in the x-subalgebra
  for (unsigned D = 0; D <= opt.max_degree; ++D) {
    if (opt.time_budget && std::chrono::steady_clock::now() - started > *opt.time_budget) {
      out.budget_exhausted = true;
      break;
    }
    out.degree_reached = D;
    const auto monos = monomials_up_to(alg->size(), D);
    std::map<Exponents, std::vector<std::pair<std::size_t, RatFunc>>> by_gamma;
    for (std::size_t a = 0; a < monos.size(); ++a)
      for (const auto& t : table.of(monos[a]).terms()) by_gamma[t.exp].emplace_back(a, t.coeff);

    auto rows_at = [&](std::span<const Rational> point) {
      std::vector<SparseRow> rows;
      for (const auto& [gamma, entries] : by_gamma) {
        SparseRow row;
        for (const auto& [a, c] : entries) {
          RatFunc v = (c.var_mask() & t_mask) ? c.evaluate(t_mask, point) : c;
          if (!v.is_zero()) row.emplace_back(a, std::move(v));
        }
        rows.push_back(std::move(row));
      }
      return rows;
    };
    RowCollector rc(monos.size(), t_mask, opt.seed + D, rows_at);
    rc.saturate(2);
    std::vector<Vector> kernel;
    for (int retry = 0;; ++retry) {
      kernel = nullspace(rc.rows(), monos.size(), opt.seed);
      bool all_ok = true;
      for (const auto& v : kernel) {
        OrePolyBuilder nf(alg);
        for (std::size_t a = 0; a < monos.size(); ++a)
          if (!v[a].is_zero()) nf.add(table.of(monos[a]), v[a]);
        if (!nf.build().is_zero()) all_ok = false;
      }
      if (all_ok) break;
      if (retry == 3) throw Error(ErrorCode::Unsupported, "t-evaluation did not determine the t-free system");
      rc.saturate(4);
    }

    std::vector<TelescopingResult> candidates;
    for (const auto& v : kernel) {
      OrePolyBuilder q(alg);
      for (std::size_t a = 0; a < monos.size(); ++a)
        if (!v[a].is_zero()) q.add(monos[a], v[a]);
      TelescopingResult r = extract_telescoper(q.build(), I, t_mask, opt.order);
      r.method = SearchMethod::Fasenmyer;
      r.degree = D;
      candidates.push_back(std::move(r));
    }
    std::stable_sort(candidates.begin(), candidates.end(), simpler);
    bool added = false;
    for (auto& r : candidates) {
      OrePoly A = to_x_subalgebra(r.telescoper, sub, t_mask);
      if (!found.empty() && is_member(A, LeftIdeal(sub, found), opt.order)) continue;
      found.push_back(std::move(A));
      out.results.push_back(std::move(r));
      added = true;
    }
    if (!added) continue;
    out.dimension = hilbert_dimension(LeftIdeal(sub, found));
    if (!opt.target_dim || within(out.dimension, *opt.target_dim)) {
      out.target_met = opt.target_dim.has_value();
      break;
    }
  }
  if (!out.results.empty() && opt.target_dim && !out.target_met && !out.budget_exhausted)
    out.budget_exhausted = true;
  if (out.results.empty() && out.degree_reached == opt.max_degree) out.budget_exhausted = true;
  return out;
}

}  // namespace orealg
