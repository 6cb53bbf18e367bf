#include <gtest/gtest.h>

#include "deltaq/specialization.hpp"
#include "deltaq/symfunc.hpp"

using namespace deltaq;

TEST(FAtOne, Values) {
  EXPECT_EQ(f_at_one({1, 1, 1}, 3), 1);
  EXPECT_EQ(f_at_one({2}, 2), -1);
  EXPECT_EQ(f_at_one({2, 1}, 3), -2);
  EXPECT_THROW(f_at_one({2, 1}, 4), std::invalid_argument);
}

TEST(FAtOneMinusT, Values) {
  EXPECT_EQ(f_at_one_minus_t({1, 1}, 2), (TPoly{1, -1}));
  EXPECT_EQ(f_at_one_minus_t({2}, 2), (TPoly{-1, 0, 1}));
  EXPECT_EQ(f_at_one_minus_t({2, 1}, 3), (TPoly{-2, 1, 1}));
}

TEST(FAtOneMinusT, MatchesPlethysticEvaluation) {
  const SymEngine& eng = default_engine();
  for (int m = 1; m <= 7; ++m) {
    for (const auto& mu : partitions_of(m)) {
      const TRat direct = eng.plethystic_eval(SymFuncExpr::element(Basis::f, mu), TPoly{1, -1});
      EXPECT_EQ(TRat(f_at_one_minus_t(mu, m)), direct) << to_string(mu);
      EXPECT_EQ(f_at_one_minus_t(mu, m).eval(1), 0);
      EXPECT_EQ(f_at_one_minus_t(mu, m).eval(0), f_at_one(mu, m));
    }
  }
}

TEST(HfProductSeries, Values) {
  EXPECT_EQ(hf_product_series({1}, 1, 5).truncated_poly(), (TPoly{1}));
  EXPECT_EQ(hf_product_series({1, 1}, 2, 3).truncated_poly(), (TPoly{1, 1, 1, 1}));
  // G_2 * f_2[1-t] = -(1-t^2)/((1-t)(1-t^2)) = -1/(1-t)
  EXPECT_EQ(hf_product_series({2}, 2, 3).truncated_poly(), (TPoly{-1, -1, -1, -1}));
}

TEST(HfProductSeries, BothRoutesAgree) {
  for (int m = 1; m <= 7; ++m) {
    for (const auto& mu : partitions_of(m)) EXPECT_NO_THROW(hf_product_series(mu, m, 25)) << to_string(mu);
  }
}

TEST(MonomialEval, Values) {
  EXPECT_EQ(monomial_eval({2}, {2}), (TPoly{1, 0, 1}));
  EXPECT_EQ(monomial_eval({1, 1}, {2}), (TPoly{0, 1}));
  EXPECT_EQ(monomial_eval({1, 1, 1}, {2}), TPoly{});
}

TEST(MonomialEval, MatchesPlethysticEvaluation) {
  const SymEngine& eng = default_engine();
  for (int n = 1; n <= 5; ++n) {
    for (const auto& lambda : partitions_of(n)) {
      for (int m = 1; m <= 4; ++m) {
        for (const auto& mu : partitions_of(m)) {
          TPoly alphabet;
          for (int part : mu.parts()) alphabet += t_analog(part);
          EXPECT_EQ(TRat(monomial_eval(lambda, mu)),
                    eng.plethystic_eval(SymFuncExpr::element(Basis::m, lambda), alphabet));
        }
      }
    }
  }
}

TEST(CoeffFFormal, Values) {
  EXPECT_EQ(coeff_f_formal({2}, 1, 4).truncated_poly(), (TPoly{1, 1}));
  EXPECT_EQ(coeff_f_formal({1, 1}, 1, 4).truncated_poly(), (TPoly{1}));
  EXPECT_EQ(coeff_f_formal({1}, 1, 4).truncated_poly(), (TPoly{1}));
  EXPECT_THROW(coeff_f_formal({1}, 2, 4), std::invalid_argument);
  EXPECT_THROW(coeff_f_formal({2}, 0, 4), std::invalid_argument);
}

TEST(CoeffFFormal, TailVanishes) {
  // the coefficient is a polynomial of degree at most n(n-1)/2
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (const auto& lambda : partitions_of(n)) {
        const int top = n * (n - 1) / 2;
        const TSeries s = coeff_f_formal(lambda, k, top + 6);
        for (int d = top + 1; d <= top + 6; ++d) EXPECT_EQ(s.coeff(d), 0) << to_string(lambda) << " k=" << k;
      }
    }
  }
}
