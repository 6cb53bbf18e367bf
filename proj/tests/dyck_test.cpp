#include <gtest/gtest.h>

#include "deltaq/dyck.hpp"

using namespace deltaq;

TEST(DyckPath, Validation) {
  EXPECT_THROW(DyckPath({}), std::invalid_argument);
  EXPECT_THROW(DyckPath({1}), std::invalid_argument);
  EXPECT_THROW(DyckPath({0, 2}), std::invalid_argument);
  EXPECT_NO_THROW(DyckPath({0, 1, 2, 0}));
}

TEST(DyckPath, Steps) {
  EXPECT_EQ(DyckPath({0, 1, 2, 2, 1, 2, 1, 2}).steps(), "NNNENEENNEENNEEE");
  EXPECT_EQ(DyckPath({0, 0}).steps(), "NENE");
}

TEST(DyckPath, Enumerate) {
  EXPECT_EQ(enumerate_paths(1), (std::vector<DyckPath>{DyckPath({0})}));
  EXPECT_EQ(enumerate_paths(2), (std::vector<DyckPath>{DyckPath({0, 0}), DyckPath({0, 1})}));
  const std::vector<std::size_t> catalan{1, 1, 2, 5, 14, 42, 132, 429, 1430};
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(enumerate_paths(n).size(), catalan[static_cast<std::size_t>(n)]);
}

TEST(DyckPath, LambdaOf) {
  EXPECT_EQ(lambda_of(DyckPath({0, 1, 2, 2, 1, 2, 1, 2})), (Partition{3, 2, 2, 1}));
  EXPECT_EQ(lambda_of(DyckPath({0, 0, 0, 0})), (Partition{1, 1, 1, 1}));
  EXPECT_EQ(lambda_of(DyckPath({0, 1, 2, 3})), (Partition{4}));
}

TEST(DyckPath, HPoly) {
  EXPECT_EQ(H_poly(DyckPath({0, 0}), 1), TLaurent(TPoly{1}));
  EXPECT_EQ(H_poly(DyckPath({0, 1}), 1), TLaurent(TPoly{1}) + TLaurent::monomial(1, -1));
  for (const auto& d : enumerate_paths(5)) EXPECT_EQ(H_poly(d, 0), TLaurent(TPoly{1}));
  EXPECT_TRUE(H_poly(DyckPath({0, 0}), 2).is_zero());
}

TEST(DecoratedDyckPath, Validation) {
  const DyckPath d({0, 1, 2, 2, 1, 2, 1, 2});
  EXPECT_THROW(DecoratedDyckPath(d, {1}), std::invalid_argument);   // row 1 starts a run
  EXPECT_THROW(DecoratedDyckPath(d, {4}), std::invalid_argument);   // row 4 starts a run
  EXPECT_THROW(DecoratedDyckPath(d, {2, 2}), std::invalid_argument);
  EXPECT_THROW(DecoratedDyckPath(d, {9}), std::invalid_argument);
}

TEST(DecoratedDyckPath, AreaExample) {
  const DecoratedDyckPath d(DyckPath({0, 1, 2, 2, 1, 2, 1, 2}), {0, 3, 8});
  EXPECT_EQ(d.decorated_area(), 7);
  EXPECT_TRUE(d.is_decorated(0));
  EXPECT_FALSE(d.is_decorated(2));
}

TEST(DecoratedDyckPath, Enumerate) {
  const auto two = enumerate_decorated(2, 1, Partition{2});
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].decorated_rows(), (std::vector<int>{0}));
  EXPECT_EQ(two[0].decorated_area(), 1);
  EXPECT_EQ(two[1].decorated_rows(), (std::vector<int>{2}));
  EXPECT_EQ(two[1].decorated_area(), 0);
  for (const auto& d : enumerate_decorated(3, 3)) EXPECT_EQ(d.decorated_area(), d.path().area());
  EXPECT_THROW(enumerate_decorated(2, 3), std::invalid_argument);
}

TEST(DecoratedDyckPath, CountMatchesHPoly) {
  // |decorations| = n-k subsets counted by H_{n-k} at t = 1
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      Int from_h = 0;
      for (const auto& d : enumerate_paths(n)) {
        const TLaurent h = H_poly(d, n - k);
        for (int e = h.offset(); e <= h.max_exponent() && !h.is_zero(); ++e) from_h += h.coeff(e);
      }
      EXPECT_EQ(from_h, Int(enumerate_decorated(n, k).size()));
    }
  }
}
