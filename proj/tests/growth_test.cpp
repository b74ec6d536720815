#include <gtest/gtest.h>

#include <chrono>
#include <map>

#include "orealg/arith/gcd.hpp"
#include "orealg/error.hpp"
#include "orealg/growth/growth.hpp"
#include "support/algebras.hpp"
#include "support/poly_parse.hpp"
#include "support/sequences.hpp"

using namespace orealg;
using namespace testing_support;

namespace {

// Linear factor a*k + b*n + c kept monic in k (a = 1) or constant in k
// (a = 0, b = 1). Enough for every polynomial met by the binomial recurrence.
struct Lin {
  int a, b, c;
  auto operator<=>(const Lin&) const = default;
};
using Factored = std::map<Lin, int>;

Factored lcm_f(const Factored& x, const Factored& y) {
  Factored r = x;
  for (const auto& [f, e] : y) r[f] = std::max(r[f], e);
  return r;
}
Factored mul_f(Factored x, const Factored& y) {
  for (const auto& [f, e] : y) x[f] += e;
  return x;
}
// Shift n -> n+1 or k -> k+1.
Factored shift_f(const Factored& x, bool on_n) {
  Factored r;
  for (const auto& [f, e] : x) r[Lin{f.a, f.b, f.c + (on_n ? f.b : f.a)}] += e;
  return r;
}
unsigned deg_k(const Factored& x) {
  unsigned d = 0;
  for (const auto& [f, e] : x) d += static_cast<unsigned>(f.a * e);
  return d;
}

}  // namespace

TEST(Growth, FitExponent) {
  EXPECT_EQ(fit_growth_exponent({0, 2, 4, 6, 8, 10, 12, 14, 16}).p, 1u);
  EXPECT_EQ(fit_growth_exponent({0, 2, 6, 12, 20, 30, 42, 56, 72}).p, 2u);
  EXPECT_EQ(fit_growth_exponent({0, 3, 3, 3, 3, 3, 3, 3, 3}).p, 0u);
  auto f = fit_growth_exponent({0, 1, 3, 4, 6, 7, 9, 10, 12, 13});
  EXPECT_EQ(f.p, 1u);
  EXPECT_FALSE(f.exact);
}

TEST(Growth, UniformReductionBinomial) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  const std::uint32_t t = 1u << 1;
  auto ur = uniform_reduction_data(B, t);
  ASSERT_EQ(ur.gamma.size(), 1u);
  // Shift quotients u(n+1,k)/u(n,k) = (n+1)/(n+1-k) and u(n,k+1)/u(n,k) = (n-k)/(k+1).
  std::vector<std::string> names = {"n", "k"};
  MPoly expectL = (poly("k + 1", names) * poly("k - n - 1", names)).monic();
  EXPECT_EQ(ur.L.monic(), expectL);
  EXPECT_EQ(ur.ell, 2u);
  // deg_k of L * (n-k)/(k+1) = (k - n - 1)(n - k) is 2.
  EXPECT_EQ(ur.m, 2u);
  for (const auto& e : ur.table)
    for (const auto& term : e.nf.terms()) {
      RatFunc c = RatFunc(ur.L) * term.coeff;
      EXPECT_EQ(c.den().degree_in(t), 0u);
      EXPECT_LE(c.num().degree_in(t), ur.m);
    }
}

TEST(Growth, UniformReductionDifferential) {
  auto alg = shift_algebra({"x"}, OreKind::Differentiation);
  LeftIdeal I(alg, ops({"(x^2 + 1)*Sx - x"}, alg));
  auto ur = uniform_reduction_data(I, 1u);
  EXPECT_EQ(ur.L, poly("x^2 + 1", {"x"}));
  EXPECT_EQ(ur.m, 1u);
  auto one = shift_algebra({"x", "y"});
  auto u1 = uniform_reduction_data(LeftIdeal(one, ops({"Sx - 1", "Sy - 1"}, one)), 3u);
  EXPECT_EQ(u1.L, MPoly(1));
  EXPECT_EQ(u1.m, 0u);
}

TEST(Growth, RecurrenceMatchesFactoredOracle) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  const unsigned S = 8;
  auto cert = growth_recurrence(B, 1u << 1, S);
  Factored L{{Lin{1, 0, 1}, 1}, {Lin{1, -1, -1}, 1}};
  Factored P;
  std::vector<unsigned> expect{0};
  for (unsigned s = 0; s < S; ++s) {
    P = lcm_f(P, lcm_f(mul_f(L, shift_f(P, true)), mul_f(L, shift_f(P, false))));
    expect.push_back(deg_k(P));
  }
  EXPECT_EQ(cert.degrees, expect);
  for (unsigned s = 0; s < S; ++s)
    EXPECT_TRUE(MPoly::divexact(cert.polys[s + 1], cert.polys[s]).has_value()) << s;
  for (unsigned s = 0; s < S; ++s) EXPECT_LE(cert.degrees[s], cert.degrees[s + 1]);
}

TEST(Growth, DifferenceFormHasSameRecurrence) {
  auto alg = shift_algebra({"n", "k"});
  auto dalg = alg->with_kind({0, 1}, OreKind::Difference);
  auto gens = ops(kBinomial, alg);
  std::vector<OrePoly> dg;
  for (const auto& g : gens) dg.push_back(shift_to_difference(g, {0, 1}, dalg));
  auto a = growth_recurrence(LeftIdeal(alg, gens), 2u, 6);
  auto b = growth_recurrence(LeftIdeal(dalg, dg), 2u, 6);
  EXPECT_EQ(a.degrees, b.degrees);
}

TEST(Growth, DifferentialIsLPower) {
  auto alg = shift_algebra({"x"}, OreKind::Differentiation);
  LeftIdeal I(alg, ops({"(x^2 + 1)*Sx - x"}, alg));
  auto cert = growth_recurrence(I, 1u, 8);
  EXPECT_EQ(cert.method, GrowthMethod::HolonomicLPower);
  MPoly L = poly("x^2 + 1", {"x"});
  for (unsigned s = 0; s <= 8; ++s) EXPECT_EQ(cert.polys[s], L.pow(s)) << s;
  EXPECT_EQ(cert.p, 1u);
}

TEST(Growth, TrivialIdealIsDegenerate) {
  auto alg = shift_algebra({"x"});
  auto cert = growth_recurrence(LeftIdeal(alg, ops({"Sx - 1"}, alg)), 1u, 8);
  for (const auto& P : cert.polys) EXPECT_EQ(P, MPoly(1));
  EXPECT_EQ(cert.p, 0u);
  EXPECT_TRUE(cert.degenerate);
}

TEST(Growth, Errors) {
  auto alg = shift_algebra({"k", "l"});
  EXPECT_THROW(growth_recurrence(LeftIdeal(alg, ops({"Sk*Sl - (l + 1)*Sl - 1"}, alg)), 1u, 4), Error);
  auto q = shift_algebra({"x"}, OreKind::DividedDifference);
  try {
    growth_recurrence(LeftIdeal(q, ops({"Sx - 1"}, q)), 1u, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotDifferenceDifferential);
  }
}

TEST(Growth, ProbeBinomial) {
  auto alg = shift_algebra({"n", "k"});
  auto cert = growth_probe(LeftIdeal(alg, ops(kBinomial, alg)), 2u, 10);
  EXPECT_EQ(cert.p, 1u);
  EXPECT_TRUE(cert.heuristic);
}

TEST(Growth, ProbeDoubleStirling) {
  auto alg = shift_algebra(kDoubleStirlingVars);
  auto t0 = std::chrono::steady_clock::now();
  auto cert = growth_probe(LeftIdeal(alg, ops(kDoubleStirlingIdeal, alg)), 1u << 2, 10);
  RecordProperty("seconds", std::to_string(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()));
  std::string ds;
  for (auto d : cert.degrees) ds += std::to_string(d) + " ";
  EXPECT_EQ(cert.p, 1u) << ds;
}

TEST(Growth, ProbeNonProperIsQuadratic) {
  auto alg = shift_algebra({"m", "k"});
  auto cert = growth_probe(LeftIdeal(alg, ops(kNonProper, alg)), 2u, 10);
  std::string ds;
  for (auto d : cert.degrees) ds += std::to_string(d) + " ";
  EXPECT_EQ(cert.p, 2u) << ds;
}

TEST(Growth, ProbeUnitIdeal) {
  auto alg = shift_algebra({"n", "k"});
  auto cert = growth_probe(LeftIdeal(alg, ops({"Sn - k", "Sk - 1"}, alg)), 2u, 8);
  EXPECT_EQ(cert.p, 0u);
  EXPECT_TRUE(cert.degenerate);
}

TEST(Growth, ProbeAgreesAcrossShiftAndDifference) {
  auto alg = shift_algebra({"k", "l"});
  auto dalg = alg->with_kind({0, 1}, OreKind::Difference);
  auto gens = ops({"Sk*Sl - (l + 1)*Sl - 1"}, alg);
  std::vector<OrePoly> dg;
  for (const auto& g : gens) dg.push_back(shift_to_difference(g, {0, 1}, dalg));
  auto a = growth_probe(LeftIdeal(alg, gens), 1u, 9);
  auto b = growth_probe(LeftIdeal(dalg, dg), 1u, 9);
  EXPECT_EQ(a.p, b.p);
}

TEST(Growth, SpecializedProbeMatchesExact) {
  auto alg = shift_algebra({"n", "k"});
  for (const auto& gens : {kBinomial, std::vector<std::string>{"Sn*Sk - (k + 1)*Sk - 1"}}) {
    LeftIdeal I(alg, ops(gens, alg));
    auto spec = growth_probe(I, 2u, 6);
    auto exact = growth_probe(I, 2u, 6, {.allow_specialization = false});
    EXPECT_EQ(exact.note, "exact normal forms");
    EXPECT_EQ(spec.note, "non-t variables specialized at random integers");
    EXPECT_EQ(spec.degrees, exact.degrees);
  }
}
