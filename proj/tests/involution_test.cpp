#include <gtest/gtest.h>

#include <random>

#include "deltaq/involution.hpp"

using namespace deltaq;

namespace {

ColumnStack stack(int row_len, Partition above, std::vector<int> labels) {
  return ColumnStack{row_len, std::move(above), std::move(labels)};
}

// A lambda-free diagram; labels are all zero.
LabeledDiagram unlabeled(std::vector<ColumnStack> stacks) { return LabeledDiagram{std::move(stacks), Partition{}}; }

LabeledDiagram random_diagram(std::mt19937& rng) {
  for (;;) {
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto lambdas = partitions_of(1 + static_cast<int>(rng() % 4));
    const Partition lambda = lambdas[rng() % lambdas.size()];
    const auto all = enumerate_degree(k, lambda, static_cast<int>(rng() % 7));
    if (!all.empty()) return all[rng() % all.size()];
  }
}

}  // namespace

TEST(Involution, WeightExamples) {
  // lambda = (5,3,3,2,1,1) placed over rows (2,1,4,2)
  const LabeledDiagram s{{stack(2, {1, 1, 1}, {0, 2}), stack(1, {1}, {5}), stack(4, {3, 2, 2, 1}, {1, 3, 0, 3}),
                          stack(2, {2, 2, 1}, {0, 1})},
                         Partition{5, 3, 3, 2, 1, 1}};
  EXPECT_FALSE(diagram_violation(s));
  EXPECT_EQ(weight(s), 32);
  EXPECT_EQ(sign(s), -1);
  // no labels, first stack wider than the later constraint allows; weight only
  const LabeledDiagram w = unlabeled({stack(2, {2, 1, 1, 1}, {0, 0}), stack(1, {}, {0}),
                                      stack(3, {2, 1, 1}, {0, 0, 0}), stack(2, {1, 1, 1, 1}, {0, 0})});
  EXPECT_EQ(weight(w), 13);
  EXPECT_TRUE(diagram_violation(w));
  EXPECT_EQ(weight(unlabeled({stack(3, {}, {0, 0, 0})})), 0);
}

TEST(Involution, Validation) {
  EXPECT_TRUE(diagram_violation(LabeledDiagram{}));
  EXPECT_TRUE(diagram_violation(LabeledDiagram{{stack(2, {}, {0, 1})}, Partition{2}}));
  EXPECT_TRUE(diagram_violation(LabeledDiagram{{stack(2, {}, {0})}, Partition{}}));
  EXPECT_TRUE(diagram_violation(LabeledDiagram{{stack(1, {1}, {0})}, Partition{}}));
  EXPECT_FALSE(diagram_violation(LabeledDiagram{{stack(1, {}, {0}), stack(1, {1}, {0})}, Partition{}}));
}

TEST(Involution, CanCombine) {
  const Partition lam{2, 1};
  LabeledDiagram t{{stack(1, {}, {0}), stack(1, {1, 1}, {2}), stack(3, {3, 3, 2, 1}, {0, 1, 0})}, lam};
  EXPECT_FALSE(can_combine(t, 1));
  t.stacks[2].above = Partition{3, 3, 3, 3, 2, 1};
  EXPECT_TRUE(can_combine(t, 1));
  const LabeledDiagram trivial = unlabeled({stack(1, {}, {0}), stack(1, {}, {0})});
  EXPECT_TRUE(can_combine(trivial, 0));
  EXPECT_THROW(can_combine(trivial, 1), std::out_of_range);
}

TEST(Involution, SplitExample) {
  const Partition lam{2, 1};
  const LabeledDiagram before{{stack(1, {}, {0}), stack(4, {4, 4, 2, 1}, {0, 1, 0, 2})}, lam};
  const LabeledDiagram after{
      {stack(1, {}, {0}), stack(1, {1, 1}, {2}), stack(3, {3, 3, 3, 3, 2, 1}, {0, 1, 0})}, lam};
  EXPECT_EQ(split(before, 1), after);
  EXPECT_EQ(weight(before), 18);
  EXPECT_EQ(weight(after), 18);
  EXPECT_EQ(combine(after, 1), before);
  EXPECT_THROW(split(before, 0), std::invalid_argument);
  EXPECT_THROW(split(before, 2), std::out_of_range);
}

TEST(Involution, TrivialSplitAndCombine) {
  const LabeledDiagram two = unlabeled({stack(2, {}, {0, 0})});
  const LabeledDiagram ones = unlabeled({stack(1, {}, {0}), stack(1, {}, {0})});
  EXPECT_EQ(split(two, 0), ones);
  EXPECT_EQ(combine(ones, 0), two);
  EXPECT_THROW(combine(unlabeled({stack(1, {}, {1}), stack(1, {}, {0})}), 0), std::invalid_argument);
}

TEST(Involution, RandomRoundTrips) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const LabeledDiagram t = random_diagram(rng);
    for (std::size_t i = 0; i < t.stacks.size(); ++i) {
      if (t.stacks[i].row_len > 1) {
        const LabeledDiagram s = split(t, i);
        EXPECT_FALSE(diagram_violation(s));
        EXPECT_EQ(weight(s), weight(t));
        ASSERT_TRUE(can_combine(s, i));
        EXPECT_EQ(combine(s, i), t);
      } else if (i + 1 < t.stacks.size() && can_combine(t, i)) {
        const LabeledDiagram c = combine(t, i);
        EXPECT_FALSE(diagram_violation(c));
        EXPECT_EQ(weight(c), weight(t));
        EXPECT_EQ(split(c, i), t);
      }
    }
  }
}

TEST(Involution, FixedAndPaired) {
  const LabeledDiagram wide{{stack(2, {}, {2, 0})}, Partition{2}};
  EXPECT_TRUE(involution_partner(wide));
  // ((0,2),(1,0)) read as a diagram
  const LabeledDiagram strict{{stack(1, {}, {2}), stack(1, {1}, {0})}, Partition{2}};
  EXPECT_FALSE(involution_partner(strict));
  EXPECT_EQ(fixed_to_msequence(strict), (MSequence{{{0, 2}, {1, 0}}}));
  EXPECT_THROW(fixed_to_msequence(wide), std::invalid_argument);
}

TEST(Involution, DegreeSlices) {
  auto signed_count = [](int k, const Partition& lambda, int d) {
    int s = 0;
    for (const auto& t : enumerate_degree(k, lambda, d)) s += sign(t);
    return s;
  };
  EXPECT_EQ(signed_count(1, {1, 1}, 0), 1);
  EXPECT_EQ(signed_count(1, {2}, 1), 1);
  EXPECT_EQ(signed_count(1, {2}, 5), 0);
  EXPECT_TRUE(enumerate_degree(1, {1, 1, 1}, 2).empty());
  EXPECT_THROW(enumerate_degree(0, {1}, 0), std::invalid_argument);
}

TEST(Involution, LawsOnExhaustiveSlices) {
  for (int k = 1; k <= 3; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        const TPoly m = M_polynomial(lambda, k);
        for (int d = 0; d <= 6; ++d) {
          int total = 0;
          for (const auto& t : enumerate_degree(k, lambda, d)) {
            ASSERT_FALSE(diagram_violation(t));
            ASSERT_EQ(weight(t), d);
            total += sign(t);
            const auto p = involution_partner(t);
            if (!p) {
              const MSequence s = fixed_to_msequence(t);
              EXPECT_FALSE(m_violation(s));
              EXPECT_EQ(s.rho(), d);
              continue;
            }
            EXPECT_EQ(weight(*p), d);
            EXPECT_EQ(sign(*p), -sign(t));
            EXPECT_EQ(involution_partner(*p), t);
          }
          EXPECT_EQ(Int(total), m.coeff(d)) << "k=" << k << " " << to_string(lambda) << " d=" << d;
        }
      }
    }
  }
}

TEST(Involution, BlockedPairStaysBlockedAfterLaterMerge) {
  // if stacks i, i+1 cannot combine but i+1, i+2 can, the merged stack
  // still cannot absorb stack i
  int exercised = 0;
  for (int k = 2; k <= 3; ++k) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& lambda : partitions_of(n)) {
        for (int d = 0; d <= 6; ++d) {
          for (const auto& t : enumerate_degree(k, lambda, d)) {
            for (std::size_t i = 0; i + 2 < t.stacks.size(); ++i) {
              if (t.stacks[i].row_len != 1 || can_combine(t, i) || !can_combine(t, i + 1)) continue;
              ++exercised;
              EXPECT_FALSE(can_combine(combine(t, i + 1), i));
            }
          }
        }
      }
    }
  }
  EXPECT_GT(exercised, 0);
}
