#include "orealg/arith/gcd.hpp"

#include <algorithm>

#include "orealg/error.hpp"

// Multivariate gcd over Z: cheap structural shortcuts, then the heuristic
// evaluation/interpolation gcd, then a primitive PRS as the safe fallback.

namespace orealg {

namespace {

Integer int_content(const MPoly& a) {
  Integer g = 0;
  for (const auto& t : a.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_num_mpz_t());
    if (g == 1) break;
  }
  return g;
}

MPoly with_positive_lead(MPoly a) {
  if (!a.is_zero() && sgn(a.lead_coeff()) < 0) a = -a;
  return a;
}

/// Integer primitive part with positive leading coefficient. Input has
/// integer coefficients.
MPoly zpp(const MPoly& a) {
  if (a.is_zero()) return a;
  MPoly r = a;
  Integer c = int_content(a);
  if (c != 1) r /= Rational(c);
  return with_positive_lead(std::move(r));
}

Exponents monomial_content(const MPoly& a) {
  Exponents m = a.terms().front().exp;
  for (const auto& t : a.terms()) m = gcd(m, t.exp);
  return m;
}

MPoly divide_monomial(const MPoly& a, const Exponents& m) {
  if (m.is_zero()) return a;
  std::vector<MPoly::Term> ts;
  ts.reserve(a.size());
  for (const auto& t : a.terms()) ts.push_back({t.exp - m, t.coeff});
  return MPoly::from_terms(std::move(ts));
}

Integer max_norm(const MPoly& a) {
  Integer m = 0;
  for (const auto& t : a.terms()) {
    Integer v = abs(t.coeff.get_num());
    if (v > m) m = v;
  }
  return m;
}

int highest_var(std::uint32_t mask) {
  for (int v = static_cast<int>(kMaxVars) - 1; v >= 0; --v)
    if (mask & (1u << v)) return v;
  return -1;
}

MPoly zgcd(const MPoly& a, const MPoly& b);

/// Z-gcd of all coefficients of a w.r.t. var_mask, seeded with `seed`.
MPoly zcontent_in(const MPoly& a, std::uint32_t mask, MPoly seed) {
  for (const auto& [e, c] : a.coefficients_in(mask)) {
    seed = zgcd(seed, c);
    if (seed.is_constant()) break;
  }
  return with_positive_lead(seed);
}

Integer smod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

/// Recovers a polynomial from its image at var = xi by balanced xi-adic
/// expansion of every coefficient.
MPoly interpolate(MPoly gamma, std::size_t var, const Integer& xi) {
  std::vector<MPoly::Term> out;
  unsigned power = 0;
  while (!gamma.is_zero()) {
    std::vector<MPoly::Term> digit;
    for (const auto& t : gamma.terms()) {
      Integer d = smod(t.coeff.get_num(), xi);
      if (d != 0) digit.push_back({t.exp, Rational(d)});
    }
    MPoly dp = MPoly::from_terms(digit);
    for (auto t : digit) {
      t.exp[var] = static_cast<std::uint16_t>(power);
      out.push_back(std::move(t));
    }
    gamma -= dp;
    gamma /= Rational(xi);
    if (++power > 4096) return MPoly();
  }
  return MPoly::from_terms(std::move(out));
}

std::optional<MPoly> heuristic_gcd(const MPoly& a, const MPoly& b, std::size_t var) {
  Integer xi = 2 * std::min(max_norm(a), max_norm(b)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ga = a.evaluate(var, Rational(xi));
    MPoly gb = b.evaluate(var, Rational(xi));
    if (!ga.is_zero() && !gb.is_zero()) {
      MPoly gamma = zgcd(ga, gb);
      MPoly g = zpp(interpolate(gamma, var, xi));
      if (!g.is_zero() && MPoly::divexact(a, g) && MPoly::divexact(b, g)) return g;
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

MPoly coeff_of(const MPoly& a, std::size_t var, unsigned deg) {
  std::vector<MPoly::Term> ts;
  for (const auto& t : a.terms())
    if (t.exp[var] == deg) {
      MPoly::Term n = t;
      n.exp[var] = 0;
      ts.push_back(std::move(n));
    }
  return MPoly::from_terms(std::move(ts));
}

MPoly prem(MPoly r, const MPoly& b, std::size_t var) {
  unsigned db = b.degree(var);
  MPoly lb = coeff_of(b, var, db);
  while (!r.is_zero()) {
    unsigned dr = r.degree(var);
    if (dr < db) break;
    Exponents shift;
    shift[var] = static_cast<std::uint16_t>(dr - db);
    r = lb * r - coeff_of(r, var, dr) * MPoly::monomial(shift) * b;
  }
  return r;
}

MPoly prs_gcd(MPoly a, MPoly b, std::size_t var) {
  std::uint32_t vm = 1u << var;
  MPoly ca = zcontent_in(a, vm, MPoly());
  MPoly cb = zcontent_in(b, vm, MPoly());
  MPoly c = zgcd(ca, cb);
  a = *MPoly::divexact(a, ca);
  b = *MPoly::divexact(b, cb);
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  while (true) {
    MPoly r = prem(a, b, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) return with_positive_lead(c);
    a = std::move(b);
    MPoly cr = zcontent_in(r, vm, MPoly());
    b = zpp(*MPoly::divexact(r, cr));
  }
  return with_positive_lead(c * zpp(b));
}

MPoly zgcd(const MPoly& a0, const MPoly& b0) {
  if (a0.is_zero()) return with_positive_lead(b0);
  if (b0.is_zero()) return with_positive_lead(a0);
  Integer ic = gcd(int_content(a0), int_content(b0));
  MPoly icp{Rational(ic)};
  if (a0.is_constant() || b0.is_constant()) return icp;

  MPoly a = zpp(a0), b = zpp(b0);
  Exponents ma = monomial_content(a), mb = monomial_content(b);
  Exponents mg = gcd(ma, mb);
  MPoly mono = MPoly::monomial(mg, Rational(ic));
  a = divide_monomial(a, ma);
  b = divide_monomial(b, mb);
  if (a.is_constant() || b.is_constant()) return mono;
  if (a == b) return mono * a;

  std::uint32_t sa = a.var_mask(), sb = b.var_mask();
  if (sa != sb) {
    // A variable present in one input only: the gcd lives in its content.
    std::uint32_t only = sa ^ sb;
    int v = highest_var(only);
    const MPoly& with_v = (sa & (1u << v)) ? a : b;
    const MPoly& without_v = (sa & (1u << v)) ? b : a;
    MPoly h = zcontent_in(with_v, 1u << v, without_v);
    return mono * zpp(h);
  }

  if (a.size() <= b.size()) {
    if (MPoly::divexact(b, a)) return mono * a;
  } else if (MPoly::divexact(a, b)) {
    return mono * b;
  }

  std::size_t var = static_cast<std::size_t>(highest_var(sa));
  if (auto g = heuristic_gcd(a, b, var)) return mono * *g;
  return mono * prs_gcd(a, b, var);
}

}  // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return MPoly();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  return zgcd(a.primitive(), b.primitive()).monic();
}

MPoly poly_lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  MPoly g = poly_gcd(a, b);
  return (*MPoly::divexact(a, g) * b).monic();
}

MPoly content_in(const MPoly& a, std::uint32_t var_mask) {
  if (a.is_zero()) return a;
  return zcontent_in(a.primitive(), var_mask, MPoly()).monic();
}

MPoly squarefree_part(const MPoly& a, std::uint32_t var_mask) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  MPoly result(1);
  for (std::size_t v = 0; v < kMaxVars; ++v) {
    if (!(var_mask & (1u << v)) || !a.uses(v)) continue;
    MPoly g = poly_gcd(a, a.derivative(v));
    result = poly_lcm(result, *MPoly::divexact(a, g));
  }
  return result.monic();
}

}  // namespace orealg
