#include <sstream>

#include "orealg/error.hpp"
#include "orealg/verify/verify.hpp"

namespace orealg {

std::size_t SampleBox::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < lo.size(); ++i) n *= hi[i] >= lo[i] ? static_cast<std::size_t>(hi[i] - lo[i] + 1) : 0;
  return n;
}

void SampleBox::for_each(const std::function<void(const Index&)>& fn) const {
  if (size() == 0) return;
  Index p = lo;
  while (true) {
    fn(p);
    std::size_t i = 0;
    while (i < p.size() && ++p[i] > hi[i]) {
      p[i] = lo[i];
      ++i;
    }
    if (i == p.size()) return;
  }
}

namespace {

struct ShiftTerm {
  Index offset;
  Rational weight;
};

// Expansion of d^e into plain shifts of the ground variables.
std::vector<ShiftTerm> expand_monomial(const OreAlgebra& alg, const Exponents& e) {
  std::vector<ShiftTerm> out{{Index(alg.ground_count(), 0), Rational(1)}};
  for (std::size_t g = 0; g < alg.size(); ++g) {
    const unsigned k = e[g];
    if (k == 0) continue;
    const std::size_t v = alg.generator(g).var;
    std::vector<ShiftTerm> next;
    for (const auto& t : out) {
      if (alg.generator(g).kind == OreKind::Shift) {
        ShiftTerm u = t;
        u.offset[v] += k;
        next.push_back(std::move(u));
        continue;
      }
      // Delta^k = sum_j C(k, j) (-1)^(k - j) S^j
      Rational c = 1;
      for (unsigned j = 0; j <= k; ++j) {
        ShiftTerm u = t;
        u.offset[v] += j;
        u.weight *= ((k - j) % 2 ? -c : c);
        next.push_back(std::move(u));
        c = c * Rational(k - j) / Rational(j + 1);
      }
    }
    out = std::move(next);
  }
  return out;
}

std::string show(const Index& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace

std::vector<Sample> apply_operator_numeric(const OrePoly& L, const SequenceOracle& h, const SampleBox& box) {
  const AlgebraPtr& alg = L.algebra();
  for (const auto& g : alg->generators())
    if (g.kind != OreKind::Shift && g.kind != OreKind::Difference)
      throw Error(ErrorCode::NonDiscreteAlgebra, "generator " + g.name + " is not a shift or difference");
  if (h.arity() != alg->ground_count())
    throw Error(ErrorCode::OutOfDomain, h.name() + " has arity " + std::to_string(h.arity()) + " but the algebra has " +
                                            std::to_string(alg->ground_count()) + " ground variables");
  if (box.lo.size() != alg->ground_count() || box.hi.size() != alg->ground_count())
    throw Error(ErrorCode::OutOfDomain, "sample box dimension does not match the algebra");
  std::uint32_t ground = (alg->ground_count() >= 32) ? ~0u : ((1u << alg->ground_count()) - 1);
  if (L.coeff_var_mask() & ~ground) throw Error(ErrorCode::OutOfDomain, "operator coefficients use parameters");

  std::vector<std::vector<ShiftTerm>> shifts;
  for (const auto& t : L.terms()) shifts.push_back(expand_monomial(*alg, t.exp));

  std::vector<Sample> out;
  box.for_each([&](const Index& p) {
    std::vector<Rational> vals(alg->field_size());
    for (std::size_t v = 0; v < p.size(); ++v) vals[v] = Rational(p[v]);
    Sample s{p, Rational(0)};
    for (std::size_t k = 0; k < L.terms().size(); ++k) {
      Rational c;
      try {
        c = L.terms()[k].coeff.evaluate_all(vals);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::DenominatorVanishes) throw;
        s.value.reset();
        break;
      }
      for (const auto& st : shifts[k]) {
        Index q = p;
        for (std::size_t v = 0; v < q.size(); ++v) q[v] += st.offset[v];
        *s.value += c * st.weight * h.eval(q);
      }
    }
    out.push_back(std::move(s));
  });
  return out;
}

Rational definite_sum(const DefiniteSum& s, const Index& at, bool reversed) {
  auto [lo, hi] = s.window(at);
  Index q = at;
  Rational acc = 0;
  for (long j = 0; j <= hi - lo; ++j) {
    q[s.index] = reversed ? hi - j : lo + j;
    acc += s.summand->eval(q);
  }
  return acc;
}

bool IdentityReport::passed() const {
  return sum_not_annihilated.empty() && closed_form_not_annihilated.empty() && initial_value_mismatch.empty() &&
         value_mismatch.empty() && summation_order_mismatch.empty() && boundary_violation.empty() && points > 0;
}

std::string IdentityReport::summary() const {
  std::ostringstream os;
  os << (passed() ? "pass" : "FAIL") << ": " << points << " points, " << skipped << " skipped";
  auto list = [&](const char* what, const std::vector<Index>& v) {
    if (v.empty()) return;
    os << "; " << what << " at " << show(v.front());
    if (v.size() > 1) os << " and " << v.size() - 1 << " more";
  };
  list("sum not annihilated", sum_not_annihilated);
  list("closed form not annihilated", closed_form_not_annihilated);
  list("initial values differ", initial_value_mismatch);
  list("values differ", value_mismatch);
  list("summation order differs", summation_order_mismatch);
  list("summand nonzero outside window", boundary_violation);
  os << " (" << note << ")";
  return os.str();
}

IdentityReport check_identity(const IdentityCheck& c) {
  const DefiniteSum& S = c.sum;
  for (const auto& t : c.telescoper.terms())
    for (std::size_t g = 0; g < c.telescoper.algebra()->size(); ++g)
      if (t.exp[g] && c.telescoper.algebra()->generator(g).var == S.index)
        throw Error(ErrorCode::OutOfDomain, "telescoper acts on the summation variable");
  SampleBox box = c.box;
  box.lo[S.index] = box.hi[S.index] = 0;
  OraclePtr sum = make_oracle("sum", S.summand->arity(), [&S](const Index& p) {
    Index q = p;
    q[S.index] = 0;
    return definite_sum(S, q);
  });

  IdentityReport r;
  box.for_each([&](const Index& p) {
    ++r.points;
    Rational fwd = sum->eval(p);
    if (fwd != definite_sum(S, p, true)) r.summation_order_mismatch.push_back(p);
    auto [lo, hi] = S.window(p);
    Index q = p;
    for (unsigned j = 1; j <= c.boundary_margin; ++j)
      for (long k : {lo - static_cast<long>(j), hi + static_cast<long>(j)}) {
        q[S.index] = k;
        if (S.summand->eval(q) != 0) {
          r.boundary_violation.push_back(q);
          break;
        }
      }
    Rational closed = c.closed_form->eval(p);
    if (fwd != closed) {
      r.value_mismatch.push_back(p);
      if (c.initial_slice && c.initial_slice(p)) r.initial_value_mismatch.push_back(p);
    }
  });
  for (const auto& s : apply_operator_numeric(c.telescoper, *sum, box)) {
    if (!s.value) ++r.skipped;
    else if (*s.value != 0) r.sum_not_annihilated.push_back(s.point);
  }
  for (const auto& s : apply_operator_numeric(c.telescoper, *c.closed_form, box)) {
    if (s.value && *s.value != 0) r.closed_form_not_annihilated.push_back(s.point);
  }
  return r;
}

}  // namespace orealg
