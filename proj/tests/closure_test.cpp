#include <gtest/gtest.h>

#include <cmath>

#include "orealg/closure/closure.hpp"
#include "orealg/error.hpp"
#include "support/algebras.hpp"
#include "support/sequences.hpp"

using namespace orealg;
using namespace testing_support;

namespace {

// Factor ideals of C(n,k) S2(k,l) S2(n-k,m) over (n, m, k, l).
const std::vector<std::string> kBinomial4 = {"(k - n - 1)*Sn + n + 1", "(k + 1)*Sk + k - n", "Sm - 1", "Sl - 1"};
const std::vector<std::string> kStirlingKL = {"Sn - 1", "Sk*Sl - (l + 1)*Sl - 1", "Sm - 1"};
const std::vector<std::string> kStirlingNKM = {"Sn*Sk - 1", "(m + 1)*Sm*Sk + Sk - Sm", "Sl - 1"};

void expect_annihilates(const LeftIdeal& I, const Seq& f, std::size_t dim, long lo, long hi) {
  for (const auto& g : I.generators()) {
    int checked = 0;
    EXPECT_EQ(count_nonzero(g, f, dim, lo, hi, &checked), 0) << g.to_string();
    EXPECT_GT(checked, 0);
  }
}

bool contains(const LeftIdeal& big, const LeftIdeal& small) {
  for (const auto& g : small.generators())
    if (!is_member(g, big)) return false;
  return true;
}

}  // namespace

TEST(Closure, DoubleStirlingProduct) {
  auto alg = shift_algebra(kDoubleStirlingVars);
  std::vector<LeftIdeal> factors = {LeftIdeal(alg, ops(kBinomial4, alg)), LeftIdeal(alg, ops(kStirlingKL, alg)),
                                    LeftIdeal(alg, ops(kStirlingNKM, alg))};
  auto r = closure_product(factors, {.max_degree = 3});
  EXPECT_TRUE(r.bound_met);
  EXPECT_EQ(r.dimension, (Dimension{false, 2}));
  EXPECT_TRUE(same_ideal(r.ideal, LeftIdeal(alg, ops(kDoubleStirlingIdeal, alg))));
  Seq f = [](const Point& p) -> Rational {
    long n = p[0], m = p[1], k = p[2], l = p[3];
    return binomial(n, k) * stirling2(k, l) * stirling2(n - k, m);
  };
  expect_annihilates(r.ideal, f, 4, 0, 5);
}

TEST(Closure, BinomialSquared) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  auto r = closure_product(B, B, {.max_degree = 2});
  EXPECT_EQ(r.dimension, (Dimension{false, 0}));
  EXPECT_TRUE(r.bound_met);
  Seq f = [](const Point& p) -> Rational { return binomial(p[0], p[1]) * binomial(p[0], p[1]); };
  expect_annihilates(r.ideal, f, 2, 0, 12);
}

TEST(Closure, ProductWithOne) {
  auto alg = shift_algebra(kDoubleStirlingVars);
  LeftIdeal I(alg, ops(kDoubleStirlingIdeal, alg));
  LeftIdeal one(alg, ops({"Sn - 1", "Sm - 1", "Sk - 1", "Sl - 1"}, alg));
  auto r = closure_product(I, one, {.max_degree = 3});
  EXPECT_TRUE(contains(r.ideal, I));
}

TEST(Closure, SumOfIdealWithItself) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  auto r = closure_sum(B, B, {.max_degree = 2});
  EXPECT_TRUE(contains(r.ideal, B));
  EXPECT_EQ(r.dimension, (Dimension{false, 0}));
}

TEST(Closure, SumBinomialStirling) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  LeftIdeal S(alg, ops({"Sn*Sk - (k + 1)*Sk - 1"}, alg));
  auto r = closure_sum(B, S, {.max_degree = 3});
  EXPECT_TRUE(r.bound_met);
  EXPECT_FALSE(r.dimension.empty);
  EXPECT_LE(r.dimension.value, 1u);
  Seq f = [](const Point& p) -> Rational { return binomial(p[0], p[1]) + stirling2(p[0], p[1]); };
  expect_annihilates(r.ideal, f, 2, 0, 12);
}

TEST(Closure, SumOfOnes) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal one(alg, ops({"Sn - 1", "Sk - 1"}, alg));
  auto r = closure_sum(one, one, {.max_degree = 1});
  EXPECT_EQ(r.dimension, (Dimension{false, 0}));
}

TEST(Closure, ApplyShiftToBinomial) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  auto r = closure_apply(op("Sn", alg), B, {.max_degree = 2});
  EXPECT_EQ(r.dimension, (Dimension{false, 0}));
  Seq f = [](const Point& p) -> Rational { return binomial(p[0] + 1, p[1]); };
  expect_annihilates(r.ideal, f, 2, 0, 12);
}

TEST(Closure, ApplyDerivativeToExp) {
  auto alg = shift_algebra({"x"}, OreKind::Differentiation);
  LeftIdeal E(alg, ops({"Sx - 1"}, alg));
  auto r = closure_apply(op("Sx", alg), E, {.max_degree = 1});
  EXPECT_TRUE(same_ideal(r.ideal, E));
}

TEST(Closure, ApplyShiftToStirling) {
  auto alg = shift_algebra({"k", "l"});
  LeftIdeal S(alg, ops({"Sk*Sl - (l + 1)*Sl - 1"}, alg));
  auto r = closure_apply(op("Sk", alg), S, {.max_degree = 3});
  EXPECT_TRUE(r.bound_met);
  EXPECT_LE(r.dimension.value, 1u);
  Seq f = [](const Point& p) -> Rational { return stirling2(p[0] + 1, p[1]); };
  expect_annihilates(r.ideal, f, 2, 0, 10);
}

TEST(Closure, DifferentialProductRule) {
  // exp(x) * exp(2x) = exp(3x); x * exp(x) is annihilated by (D - 1)^2.
  auto alg = shift_algebra({"x"}, OreKind::Differentiation);
  auto r = closure_product(LeftIdeal(alg, ops({"Sx - 1"}, alg)), LeftIdeal(alg, ops({"Sx - 2"}, alg)), {.max_degree = 2});
  EXPECT_TRUE(is_member(op("Sx - 3", alg), r.ideal));
  auto r2 = closure_product(LeftIdeal(alg, ops({"x*Sx - 1"}, alg)), LeftIdeal(alg, ops({"Sx - 1"}, alg)), {.max_degree = 2});
  EXPECT_TRUE(is_member(op("x*Sx - x - 1", alg), r2.ideal));
}

TEST(Closure, DegreeMonotone) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  LeftIdeal S(alg, ops({"Sn*Sk - (k + 1)*Sk - 1"}, alg));
  std::optional<LeftIdeal> prev;
  for (unsigned s = 1; s <= 4; ++s) {
    auto r = closure_product(B, S, {.max_degree = s, .stop_at_bound = false});
    if (prev) EXPECT_TRUE(contains(r.ideal, *prev)) << s;
    prev = r.ideal;
  }
}

TEST(Closure, ProductCoordinateGrowth) {
  auto alg = shift_algebra({"n", "k"});
  LeftIdeal B(alg, ops(kBinomial, alg));
  LeftIdeal S(alg, ops({"Sn*Sk - (k + 1)*Sk - 1"}, alg));
  auto r = closure_product(B, S, {.max_degree = 8, .stop_at_bound = false});
  ASSERT_EQ(r.coordinate_counts.size(), 9u);
  // dim B + dim S = 1: coordinates grow at most linearly.
  double slope = std::log(double(r.coordinate_counts[8]) / double(r.coordinate_counts[4])) / std::log(9.0 / 5.0);
  EXPECT_LE(slope, 1.5);
  for (std::size_t s = 1; s < r.coordinate_counts.size(); ++s) EXPECT_GE(r.coordinate_counts[s], r.coordinate_counts[s - 1]);
}

TEST(Closure, Errors) {
  auto a = shift_algebra({"n", "k"});
  auto b = shift_algebra({"n", "k"}, OreKind::Difference);
  EXPECT_THROW(closure_sum(LeftIdeal(a, ops(kBinomial, a)), LeftIdeal(b, ops({"Sn"}, b))), Error);
  auto unit = closure_product(LeftIdeal(a, ops({"1"}, a)), LeftIdeal(a, ops(kBinomial, a)));
  EXPECT_TRUE(unit.dimension.empty);
}
