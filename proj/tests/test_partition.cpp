#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "innerforms/error.hpp"
#include "innerforms/partition.hpp"

using namespace innerforms;

namespace {

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k) {
    for (auto& p : partitions_of(k)) out.push_back(p);
  }
  return out;
}

}  // namespace

TEST(Partition, NormalizesOnConstruction) {
  EXPECT_EQ(Partition({1, 3, 0, 2}), Partition({3, 2, 1}));
  EXPECT_EQ(Partition{}.size(), 0);
  EXPECT_TRUE(Partition{}.empty());
  EXPECT_THROW(Partition::from_parts({2, -1}), Error);
  EXPECT_EQ(Partition({3, 1}).to_string(), "(3,1)");
}

TEST(Partition, TransposeExamples) {
  EXPECT_EQ(transpose(Partition{}), Partition{});
  EXPECT_EQ(transpose(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(transpose(Partition{4, 2, 1}), (Partition{3, 2, 1, 1}));
}

TEST(Partition, TimesExamples) {
  EXPECT_EQ(times(1, Partition{}), Partition{});
  EXPECT_EQ(times(2, Partition{2, 1}), (Partition{2, 2, 1, 1}));
  EXPECT_EQ(times(3, Partition{2}), (Partition{2, 2, 2}));
}

TEST(Partition, DotExamples) {
  EXPECT_EQ(dot(1, Partition{5, 2}), (Partition{5, 2}));
  EXPECT_EQ(dot(2, Partition{2, 1}), (Partition{4, 2}));
  EXPECT_EQ(dot(3, Partition{1, 1}), (Partition{3, 3}));
}

TEST(Partition, DivisibilityExamples) {
  EXPECT_TRUE(divides_times(2, Partition{3, 3, 1, 1}));
  EXPECT_FALSE(divides_times(2, Partition{4}));
  EXPECT_TRUE(divides_times(1, Partition{5, 3, 1}));
  EXPECT_TRUE(divides_dot(2, Partition{4, 2}));
  EXPECT_FALSE(divides_dot(2, Partition{3, 1}));
  EXPECT_TRUE(divides_dot(1, Partition{3, 1}));
  EXPECT_EQ(divide_times(2, Partition{3, 3, 1, 1}), (Partition{3, 1}));
}

TEST(Partition, DominanceExamples) {
  EXPECT_TRUE(dominance_leq(Partition{2, 2}, Partition{3, 1}));
  EXPECT_FALSE(dominance_leq(Partition{3, 1}, Partition{2, 2}));
  EXPECT_TRUE(dominance_leq(Partition{4, 2, 1}, Partition{4, 2, 1}));
  EXPECT_TRUE(dominance_leq(Partition{1}, Partition{3, 1}));
}

TEST(Partition, ConcatTransposeExamples) {
  const std::vector<Partition> a{Partition{2}, Partition{1, 1}};
  EXPECT_EQ(concat_transpose(a), (Partition{3, 1}));
  const std::vector<Partition> zeros(4, Partition{1});
  EXPECT_EQ(concat_transpose(zeros), (Partition{4}));
  const std::vector<Partition> single{Partition{3, 2, 2}};
  EXPECT_EQ(concat_transpose(single), (Partition{3, 2, 2}));
}

TEST(Partition, EnumerationOrderAndCounts) {
  const auto four = partitions_of(4);
  const std::vector<Partition> expected{Partition{4}, Partition{3, 1}, Partition{2, 2}, Partition{2, 1, 1},
                                        Partition{1, 1, 1, 1}};
  EXPECT_EQ(four, expected);
  const long counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(partition_count(n), counts[n]);
    EXPECT_EQ(static_cast<long>(partitions_of(n).size()), counts[n]);
  }
  EXPECT_EQ(multiplicities(Partition{3, 3, 1}), (std::vector<std::pair<int, int>>{{1, 1}, {3, 2}}));
}

TEST(PartitionProperty, TransposeIsAnInvolution) {
  for (const auto& lam : all_up_to(10)) {
    EXPECT_EQ(transpose(transpose(lam)), lam);
    EXPECT_EQ(transpose(lam).size(), lam.size());
  }
}

TEST(PartitionProperty, CorrectedScalingLemma) {
  for (const auto& lam : all_up_to(8)) {
    for (int e = 1; e <= 4; ++e) {
      EXPECT_EQ(transpose(dot(e, lam)), times(e, transpose(lam))) << lam.to_string() << " e=" << e;
      EXPECT_EQ(transpose(times(e, lam)), dot(e, transpose(lam))) << lam.to_string() << " e=" << e;
    }
  }
}

TEST(PartitionProperty, LiteralScalingLemmaFailsOnTwo) {
  // the uncorrected reading (e·λ)^t = e×λ
  EXPECT_NE(transpose(dot(2, Partition{2})), times(2, Partition{2}));
}

TEST(PartitionProperty, DominanceDuality) {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        EXPECT_EQ(dominance_leq(a, b), dominance_leq(transpose(b), transpose(a)));
      }
    }
  }
}

TEST(PartitionProperty, ConcatTransposeIgnoresOrder) {
  std::mt19937 rng(3);
  const auto pool = all_up_to(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Partition> xs;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) xs.push_back(pool[rng() % pool.size()]);
    const Partition base = concat_transpose(xs);
    std::shuffle(xs.begin(), xs.end(), rng);
    EXPECT_EQ(concat_transpose(xs), base);
    int total = 0;
    for (const auto& x : xs) total += x.size();
    EXPECT_EQ(base.size(), total);
  }
}

TEST(PartitionProperty, DividesTimesMatchesDividesDotOfTranspose) {
  for (const auto& lam : all_up_to(9)) {
    for (int e = 1; e <= 4; ++e) EXPECT_EQ(divides_times(e, lam), divides_dot(e, transpose(lam)));
  }
}
