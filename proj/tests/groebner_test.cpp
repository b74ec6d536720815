#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "orealg/error.hpp"
#include "orealg/groebner/groebner.hpp"
#include "support/algebras.hpp"
#include "support/random_ops.hpp"

using namespace orealg;
using namespace testing_support;

namespace {

Rational binom(long n, long k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

void expect_reduced_basis(const GroebnerBasis& G) {
  const auto& ord = G.order();
  for (std::size_t i = 0; i < G.size(); ++i) {
    const OrePoly& g = G.elements()[i];
    EXPECT_EQ(lead_term(g, ord).coeff, RatFunc(1));
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g.terms())
        EXPECT_FALSE(divides(G.staircase()[j], t.exp)) << "element " << i << " reducible by " << j;
    }
    for (std::size_t j = i + 1; j < G.size(); ++j)
      EXPECT_TRUE(G.normal_form(s_poly(g, G.elements()[j], ord)).is_zero()) << "S(" << i << "," << j << ")";
  }
}

}  // namespace

TEST(Groebner, UnitIdealIsOne) {
  auto alg = shift_algebra({"n", "k"});
  auto G = buchberger(alg, ops({"n*Sn + 3", "1"}, alg), default_order());
  ASSERT_EQ(G->size(), 1u);
  EXPECT_EQ(G->elements()[0], OrePoly(alg, RatFunc(1)));
  EXPECT_TRUE(G->is_unit());
  LeftIdeal I(alg, ops({"1"}, alg));
  EXPECT_TRUE(is_member(OrePoly(alg, RatFunc(1)), I));
}

TEST(Groebner, CoprimeLeadsDoNotImplyBasis) {
  // S_k (S_n - k) - S_n (S_k - 1) = S_n - (k + 1) S_k, which reduces to -1.
  auto alg = shift_algebra({"n", "k"});
  auto G = buchberger(alg, ops({"Sn - k", "Sk - 1"}, alg), default_order());
  EXPECT_TRUE(G->is_unit());
}

TEST(Groebner, BinomialIdealIsAlreadyBasis) {
  auto alg = shift_algebra({"n", "k"});
  auto gens = ops(kBinomial, alg);
  BuchbergerStats stats;
  auto G = buchberger(alg, gens, default_order(), &stats);
  ASSERT_EQ(G->size(), 2u);
  for (const auto& g : gens) {
    OrePoly m = lead_term(g, G->order()).coeff.inverse() * g;
    EXPECT_TRUE(std::find(G->elements().begin(), G->elements().end(), m) != G->elements().end()) << m.to_string();
  }
  // Independent check: the single S-pair reduces to zero modulo the inputs.
  EXPECT_TRUE(G->normal_form(s_poly(gens[0], gens[1], G->order())).is_zero());
  expect_reduced_basis(*G);
}

TEST(Groebner, BinomialNormalFormMatchesShiftQuotient) {
  auto alg = shift_algebra({"n", "k"});
  auto G = buchberger(alg, ops(kBinomial, alg), default_order());
  OrePoly r = G->normal_form(op("Sn*Sk", alg));
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.terms()[0].exp, Exponents{});
  for (long n = 3; n < 12; ++n)
    for (long k = 0; k <= n; ++k) {
      Rational expect = binom(n + 1, k + 1) / binom(n, k);
      EXPECT_EQ(r.terms()[0].coeff.evaluate_all(std::vector<Rational>{Rational(n), Rational(k)}), expect) << n << "," << k;
    }
}

TEST(Groebner, DoubleStirlingBasis) {
  auto alg = shift_algebra(kDoubleStirlingVars);
  auto gens = ops(kDoubleStirlingIdeal, alg);
  auto t0 = std::chrono::steady_clock::now();
  LeftIdeal I(alg, gens);
  auto G = I.groebner();
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  RecordProperty("seconds", std::to_string(secs));
  EXPECT_EQ(G->size(), 3u);
  for (const auto& g : gens) EXPECT_TRUE(G->normal_form(g).is_zero());
  for (const auto& g : G->elements()) EXPECT_TRUE(G->normal_form(g).is_zero());
  EXPECT_TRUE(G->normal_form(op("Sm^2", alg) * gens[0]).is_zero());
  expect_reduced_basis(*G);

  OrePoly A = op(kDoubleStirlingTelescoper, alg), B = op(kDoubleStirlingCertificate, alg);
  EXPECT_TRUE(is_member(A + (op("Sk - 1", alg) * B), I));
  EXPECT_FALSE(is_member(A, I));
}

TEST(Groebner, CanonicalUnderGeneratorPermutation) {
  auto alg = shift_algebra(kDoubleStirlingVars);
  auto gens = ops(kDoubleStirlingIdeal, alg);
  auto G0 = buchberger(alg, gens, default_order());
  std::vector<std::size_t> idx = {0, 1, 2};
  while (std::next_permutation(idx.begin(), idx.end())) {
    std::vector<OrePoly> p;
    for (auto i : idx) p.push_back(gens[i]);
    // Adding a redundant member must not change the reduced basis either.
    p.push_back(op("Sk + n", alg) * gens[idx[0]]);
    auto G = buchberger(alg, p, default_order());
    EXPECT_EQ(G->elements(), G0->elements());
  }
}

TEST(Groebner, OtherOrderGivesSameIdeal) {
  auto alg = shift_algebra(kDoubleStirlingVars);
  auto gens = ops(kDoubleStirlingIdeal, alg);
  LeftIdeal I(alg, gens);
  MonomialOrder lex{OrderKind::GradedLex, {2, 3, 0, 1}};
  auto G = I.groebner(lex);
  expect_reduced_basis(*G);
  LeftIdeal J(alg, G->elements());
  EXPECT_TRUE(same_ideal(I, J));
}

TEST(Groebner, NormalFormProperties) {
  std::mt19937_64 rng(7);
  auto alg = shift_algebra({"n", "k"});
  auto G = buchberger(alg, ops({"(k + 1)*Sk*Sn - (n + 1)*Sk - 1", "Sn^2 - Sk"}, alg), default_order());
  for (int it = 0; it < 40; ++it) {
    OrePoly f = random_op(rng, alg, 3), g = random_op(rng, alg, 3);
    OrePoly nf = G->normal_form(f);
    EXPECT_EQ(G->normal_form(nf), nf);
    EXPECT_EQ(G->normal_form(f + g), G->normal_form(nf + G->normal_form(g)));
    for (const auto& t : nf.terms()) EXPECT_FALSE(G->is_reducible(t.exp));
    if (!f.is_zero() && !nf.is_zero())
      EXPECT_LE(lead_term(nf, G->order()).exp.total(), lead_term(f, G->order()).exp.total());
    for (const auto& e : G->elements()) {
      OrePoly h = random_op(rng, alg, 2);
      EXPECT_TRUE(G->normal_form(h * e).is_zero());
    }
  }
}

TEST(Groebner, WorksForOtherKinds) {
  std::mt19937_64 rng(11);
  for (OreKind kind : {OreKind::Differentiation, OreKind::Difference, OreKind::Euler}) {
    auto alg = shift_algebra({"x", "y"}, kind);
    auto gens = ops({"x*Sx*Sy - y", "Sx^2 + y*Sy - 1"}, alg);
    auto G = buchberger(alg, gens, default_order());
    expect_reduced_basis(*G);
    for (const auto& g : gens) EXPECT_TRUE(G->normal_form(g).is_zero()) << to_string(kind);
    std::vector<OrePoly> rev(gens.rbegin(), gens.rend());
    EXPECT_EQ(buchberger(alg, rev, default_order())->elements(), G->elements());
    for (int it = 0; it < 5; ++it)
      EXPECT_TRUE(G->normal_form(random_op(rng, alg, 2) * gens[0]).is_zero());
  }
}

TEST(Groebner, AlgebraMismatchRejected) {
  auto a = shift_algebra({"n", "k"});
  auto b = shift_algebra({"n", "k"}, OreKind::Difference);
  auto G = buchberger(a, ops(kBinomial, a), default_order());
  EXPECT_THROW(G->normal_form(op("Sn", b)), Error);
}

TEST(Groebner, ParserRoundTrip) {
  for (const char* s : {"a - (b - c)", "-x^2*y", "(a + b)^3/(c*d)", "a/(b/c)", "-(-a)", "a*(b*c) + (d + e)"}) {
    auto e = cli::parse_expr(s);
    auto e2 = cli::parse_expr(cli::print_expr(*e));
    EXPECT_TRUE(cli::same_structure(*e, *e2)) << s << " -> " << cli::print_expr(*e);
    EXPECT_EQ(cli::print_expr(*e2), cli::print_expr(*e));
  }
  EXPECT_THROW(cli::parse_expr("a + "), Error);
  EXPECT_THROW(cli::parse_expr("a $ b"), Error);
}
