#include <gtest/gtest.h>

#include <random>

#include "orealg/error.hpp"
#include "orealg/ore/algebra.hpp"
#include "orealg/ore/orepoly.hpp"
#include "support/poly_parse.hpp"
#include "support/random_ops.hpp"

using namespace orealg;
using testing_support::rf;
using namespace testing_support;

namespace {

// Action of the generator on a function u (generator applied to u * 1).
RatFunc act(const OreAlgebra& alg, std::size_t g, const RatFunc& u) {
  return alg.delta_is_zero(g) ? alg.sigma(g, u) : alg.delta(g, u);
}

}  // namespace

TEST(SigmaDelta, CatalogExamples) {
  auto shift_alg = kind_algebra(OreKind::Shift);
  auto diff_alg = kind_algebra(OreKind::Differentiation);
  auto dif_alg = kind_algebra(OreKind::Difference);
  RatFunc x = RatFunc::variable(0);
  auto [sd, dd] = apply_sigma_delta(*diff_alg, 0, x);
  EXPECT_EQ(sd, x);
  EXPECT_EQ(dd, RatFunc(1));
  auto [ss, ds] = apply_sigma_delta(*shift_alg, 0, x);
  EXPECT_EQ(ss, x + RatFunc(1));
  EXPECT_TRUE(ds.is_zero());
  auto [s2, d2] = apply_sigma_delta(*dif_alg, 0, x * x);
  EXPECT_EQ(s2, x * x + RatFunc(2) * x + RatFunc(1));
  EXPECT_EQ(d2, RatFunc(2) * x + RatFunc(1));
  EXPECT_THROW(apply_sigma_delta(*dif_alg, 0, RatFunc::variable(5)), Error);
}

TEST(SigmaDelta, QDifferentiationOfPowers) {
  auto alg = kind_algebra(OreKind::QDifferentiation);
  std::vector<std::string> names{"x", "y", "q"};
  // D_q x^3 = (q^2 + q + 1) x^2
  EXPECT_EQ(alg->delta(0, rf("x^3", names)), rf("(q^2+q+1)*x^2", names));
}

TEST(SigmaDelta, SkewLeibnizAndMultiplicativityAllKinds) {
  std::mt19937_64 rng(2024);
  for (OreKind kind : kAllKinds) {
    auto alg = kind_algebra(kind);
    for (int i = 0; i < 200; ++i) {
      RatFunc u = random_rf(rng, i % 2), v = random_rf(rng, i % 3 == 0);
      EXPECT_EQ(alg->delta(0, u * v), alg->sigma(0, u) * alg->delta(0, v) + alg->delta(0, u) * v)
          << to_string(kind);
      EXPECT_EQ(alg->sigma(0, u * v), alg->sigma(0, u) * alg->sigma(0, v)) << to_string(kind);
    }
  }
}

TEST(SigmaDelta, LinearFormHoldsForEveryKind) {
  // sigma(u) = s1*(d u) + s0*u and delta(u) = d1*(d u): the linear-extension
  // hypothesis of the product closure, checked rather than assumed.
  std::mt19937_64 rng(77);
  for (OreKind kind : kAllKinds) {
    auto alg = kind_algebra(kind);
    LinearForm lf = alg->linear_form(0);
    for (int i = 0; i < 50; ++i) {
      RatFunc u = random_rf(rng, i % 2);
      RatFunc du = act(*alg, 0, u);
      EXPECT_EQ(alg->sigma(0, u), lf.s1 * du + lf.s0 * u) << to_string(kind);
      EXPECT_EQ(alg->delta(0, u), lf.d1 * du) << to_string(kind);
    }
  }
}

TEST(SigmaDelta, InverseRoundTrips) {
  std::mt19937_64 rng(8);
  for (OreKind kind : kAllKinds) {
    auto alg = kind_algebra(kind);
    if (!alg->sigma_invertible(0)) {
      EXPECT_THROW(alg->sigma_inverse(0, RatFunc::variable(0)), Error);
      continue;
    }
    for (int i = 0; i < 20; ++i) {
      RatFunc u = random_rf(rng, true);
      EXPECT_EQ(alg->sigma_inverse(0, alg->sigma(0, u)), u) << to_string(kind);
    }
  }
}

TEST(SigmaDelta, GeneratorsCommute) {
  std::mt19937_64 rng(31);
  for (OreKind kind : kAllKinds) {
    auto alg = kind_algebra(kind);
    for (int i = 0; i < 20; ++i) {
      RatFunc u = random_rf(rng, true);
      EXPECT_EQ(alg->sigma(0, alg->sigma(1, u)), alg->sigma(1, alg->sigma(0, u)));
      EXPECT_EQ(alg->delta(0, alg->sigma(1, u)), alg->sigma(1, alg->delta(0, u)));
    }
    OrePoly d = OrePoly::generator(alg, 0), s = OrePoly::generator(alg, 1);
    EXPECT_EQ(d * s, s * d);
  }
}

TEST(OrePoly, TableCommutationRules) {
  auto diff = kind_algebra(OreKind::Differentiation);
  OrePoly D = OrePoly::generator(diff, 0);
  OrePoly x(diff, RatFunc::variable(0));
  EXPECT_EQ(D * x, x * D + OrePoly(diff, RatFunc(1)));

  std::vector<std::string> names{"n", "k"};
  std::vector<OreGeneratorSpec> gens{{"Sn", OreKind::Shift, 0, std::nullopt, 0, RatFunc()},
                                     {"Sk", OreKind::Shift, 1, std::nullopt, 0, RatFunc()}};
  auto sh = make_algebra(names, {}, gens);
  OrePoly Sk = OrePoly::generator(sh, 1);
  OrePoly c(sh, rf("k-n", names));
  EXPECT_EQ(Sk * c, OrePoly::monomial(sh, Exponents::unit(1), rf("k+1-n", names)));
}

TEST(OrePoly, AssociativityAllKinds) {
  std::mt19937_64 rng(99);
  for (OreKind kind : kAllKinds) {
    auto alg = kind_algebra(kind);
    int cases = (kind == OreKind::Mahler) ? 60 : 200;
    for (int i = 0; i < cases; ++i) {
      OrePoly f = random_sparse_op(rng, alg, 2), g = random_sparse_op(rng, alg, 2), h = random_sparse_op(rng, alg, 1);
      ASSERT_EQ((f * g) * h, f * (g * h)) << to_string(kind) << ": " << f.to_string();
      EXPECT_EQ(f * (g + h), f * g + f * h);
    }
  }
}

TEST(OrePoly, LeadingExponentsAddUnderProduct) {
  // Compares against a term-by-term expansion valid for pure shift algebras:
  // (c S^a)(d S^b) = c * d(x + a) S^(a+b).
  std::vector<std::string> names{"n", "m", "k", "l"};
  std::vector<OreGeneratorSpec> gens;
  for (std::size_t i = 0; i < 4; ++i) gens.push_back({"S" + names[i], OreKind::Shift, i, std::nullopt, 0, RatFunc()});
  auto alg = make_algebra(names, {}, gens);
  Exponents kl, l;
  kl[2] = 1;
  kl[3] = 1;
  l[3] = 1;
  OrePoly stir = OrePoly::monomial(alg, kl) - OrePoly::monomial(alg, l, rf("l+1", names)) - OrePoly(alg, RatFunc(1));
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    OrePolyBuilder b(alg);
    std::uniform_int_distribution<int> g(0, 3), c(-3, 3);
    for (int i = 0; i < 4; ++i) {
      Exponents e;
      e[g(rng)] += 1;
      e[g(rng)] += 1;
      b.add(e, RatFunc(MPoly::variable(g(rng)) + MPoly(c(rng))));
    }
    OrePoly other = b.build();
    if (other.is_zero()) continue;
    OrePoly prod = stir * other;
    OrePolyBuilder oracle(alg);
    for (const auto& s : stir.terms())
      for (const auto& t : other.terms()) {
        RatFunc shifted = t.coeff;
        for (std::size_t v = 0; v < 4; ++v) shifted = shifted.shift(v, Rational(s.exp[v]));
        oracle.add(s.exp + t.exp, s.coeff * shifted);
      }
    EXPECT_EQ(prod, oracle.build());
    EXPECT_EQ(prod.degree(), 4u);
    EXPECT_EQ(prod.terms().front().exp, stir.terms().front().exp + other.terms().front().exp);
  }
}

TEST(OrePoly, AlgebraMismatchIsReported) {
  auto a = kind_algebra(OreKind::Shift);
  auto b = kind_algebra(OreKind::Differentiation);
  EXPECT_THROW(OrePoly::generator(a, 0) * OrePoly::generator(b, 0), Error);
}

TEST(Witness, TelescopableKinds) {
  auto dif = kind_algebra(OreKind::Difference);
  auto w = telescopable_witness(*dif, 0, {0});
  ASSERT_TRUE(w);
  EXPECT_EQ(w->first, RatFunc::variable(0));
  EXPECT_EQ(w->second, RatFunc(1));
  auto diff = kind_algebra(OreKind::Differentiation);
  auto wd = telescopable_witness(*diff, 0, {0});
  ASSERT_TRUE(wd);
  EXPECT_EQ(wd->second, RatFunc(1));
  auto qd = kind_algebra(OreKind::QDifferentiation);
  ASSERT_TRUE(telescopable_witness(*qd, 0, {0}));
  for (OreKind k : {OreKind::Shift, OreKind::QDilation, OreKind::QShift, OreKind::Mahler})
    EXPECT_FALSE(telescopable_witness(*kind_algebra(k), 0, {0})) << to_string(k);
}

TEST(ShiftDifference, MuMapExamplesAndRoundTrip) {
  std::vector<std::string> names{"k", "l"};
  std::vector<OreGeneratorSpec> gens{{"Sk", OreKind::Shift, 0, std::nullopt, 0, RatFunc()},
                                     {"Sl", OreKind::Shift, 1, std::nullopt, 0, RatFunc()}};
  auto sh = make_algebra(names, {}, gens);
  auto df = sh->with_kind({0, 1}, OreKind::Difference);
  Exponents k = Exponents::unit(0), l = Exponents::unit(1), kl = k + l;
  OrePoly one(sh, RatFunc(1));
  OrePoly sk1 = OrePoly::monomial(sh, k) - one;
  EXPECT_EQ(shift_to_difference(sk1, {0}, sh->with_kind({0}, OreKind::Difference)),
            OrePoly::monomial(sh->with_kind({0}, OreKind::Difference), k));

  OrePoly stir = OrePoly::monomial(sh, kl) - OrePoly::monomial(sh, l, rf("l+1", names)) - one;
  OrePoly mu = shift_to_difference(stir, {0, 1}, df);
  // (D_k+1)(D_l+1) - (l+1)(D_l+1) - 1 = DkDl + Dk + Dl - (l+1)Dl - (l+1)
  OrePoly expected = OrePoly::monomial(df, kl) + OrePoly::monomial(df, k) + OrePoly::monomial(df, l) -
                     OrePoly::monomial(df, l, rf("l+1", names)) - OrePoly(df, rf("l+1", names));
  EXPECT_EQ(mu, expected);
  EXPECT_EQ(difference_to_shift(mu, {0, 1}, sh), stir);
  EXPECT_EQ(shift_to_difference(one, {0, 1}, df), OrePoly(df, RatFunc(1)));
  EXPECT_THROW(shift_to_difference(mu, {0}, df), Error);
}

TEST(ShiftDifference, MuIsMultiplicative) {
  std::vector<std::string> names{"k", "l"};
  std::vector<OreGeneratorSpec> gens{{"Sk", OreKind::Shift, 0, std::nullopt, 0, RatFunc()},
                                     {"Sl", OreKind::Shift, 1, std::nullopt, 0, RatFunc()}};
  auto sh = make_algebra(names, {}, gens);
  auto df = sh->with_kind({0}, OreKind::Difference);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 30; ++i) {
    OrePoly f = random_sparse_op(rng, sh, 2), g = random_sparse_op(rng, sh, 2);
    EXPECT_EQ(shift_to_difference(f * g, {0}, df), shift_to_difference(f, {0}, df) * shift_to_difference(g, {0}, df));
  }
}
