#include "symwalk/partitions.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace symwalk;

namespace {

// p(n) by Euler's pentagonal recurrence.
std::vector<BigInt> euler_partition_counts(int limit) {
  std::vector<BigInt> p(static_cast<std::size_t>(limit + 1), 0);
  p[0] = 1;
  for (int n = 1; n <= limit; ++n) {
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const int sign = k % 2 ? 1 : -1;
      p[n] += sign * p[n - g1];
      if (g2 <= n) p[n] += sign * p[n - g2];
    }
  }
  return p;
}

// Standard Young tableaux counted by removing the largest entry, which
// always sits in a corner.
BigInt count_syt(std::vector<int> rows, std::map<std::vector<int>, BigInt>& memo) {
  while (!rows.empty() && rows.back() == 0) rows.pop_back();
  if (rows.empty()) return 1;
  if (auto it = memo.find(rows); it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const bool corner = i + 1 == rows.size() || rows[i + 1] < rows[i];
    if (!corner) continue;
    auto smaller = rows;
    --smaller[i];
    total += count_syt(smaller, memo);
  }
  memo[rows] = total;
  return total;
}

}  // namespace

TEST(Partitions, ValidatesParts) {
  EXPECT_THROW(Partition({2, 3}), std::invalid_argument);
  EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
  const Partition p({4, 4, 2});
  EXPECT_EQ(p.n(), 10);
  EXPECT_EQ(p.row(3), 2);
  EXPECT_EQ(p.row(4), 0);
  EXPECT_EQ(p.to_string(), "(4,4,2)");
  EXPECT_EQ(Partition().to_string(), "()");
}

TEST(Partitions, CountMatchesPentagonalRecurrence) {
  const auto p = euler_partition_counts(40);
  for (int n = 1; n <= 40; ++n)
    EXPECT_EQ(BigInt(enumerate_partitions(n).size()), p[n]) << n;
  EXPECT_EQ(enumerate_partitions(25).size(), 1958u);
}

TEST(Partitions, EnumerationIsReverseLexicographic) {
  const auto all = enumerate_partitions(12);
  EXPECT_EQ(all.front(), Partition({12}));
  EXPECT_EQ(all.back(), Partition(std::vector<int>(12, 1)));
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_GT(all[i - 1], all[i]);
}

TEST(Partitions, HookFormulaMatchesTableauxCount) {
  std::map<std::vector<int>, BigInt> memo;
  for (int n = 1; n <= 12; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      EXPECT_EQ(dimension(lambda), count_syt(lambda.parts(), memo)) << lambda.to_string();
}

TEST(Partitions, DimensionSquaresSumToOrder) {
  for (int n = 1; n <= 20; ++n) {
    BigInt sum = 0;
    for (const auto& lambda : enumerate_partitions(n)) sum += dimension(lambda) * dimension(lambda);
    EXPECT_EQ(sum, factorial(n)) << n;
  }
}

TEST(Partitions, KnownDimensions) {
  EXPECT_EQ(dimension(Partition({3, 2})), BigInt(5));
  EXPECT_EQ(dimension(Partition({4, 4, 2})), BigInt(252));
  EXPECT_EQ(dimension(Partition({2, 2})), BigInt(2));
}

TEST(Partitions, HookCells) {
  const auto cells = hook_cells(Partition({3, 1}));
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].hook_length, 4);
  EXPECT_EQ(cells[1].hook_length, 2);
  EXPECT_EQ(cells[2].hook_length, 1);
  EXPECT_EQ(cells[3].hook_length, 1);
}

TEST(Partitions, DimSquareSumBound) {
  for (int n = 2; n <= 16; ++n) {
    BigInt total = 0;
    for (int l = 1; l <= n; ++l) {
      const auto s = dim_square_sum_bound(n, l);
      EXPECT_LE(s.exact, s.bound) << n << ' ' << l;
      total += s.exact;
    }
    EXPECT_EQ(total, factorial(n));
  }
}

TEST(Partitions, BoxLowerBound) {
  for (int n = 4; n <= 30; ++n) {
    const Partition sq = near_square_partition(n);
    const int s = sq.length(), t = sq.first();
    EXPECT_LE(box_dim_lower_bound(sq, s, t), to_real(dimension(sq))) << n;
  }
  EXPECT_THROW(box_dim_lower_bound(Partition({5}), 1, 4), std::invalid_argument);
}

TEST(Partitions, NearSquareAndStaircase) {
  EXPECT_EQ(near_square_partition(10), Partition({4, 4, 2}));
  EXPECT_EQ(near_square_partition(16), Partition({4, 4, 4, 4}));
  EXPECT_EQ(staircase_partition(3), Partition({3, 2, 1}));
}

TEST(Partitions, Dominance) {
  EXPECT_TRUE(dominates(Partition({3, 1}), Partition({2, 2})));
  EXPECT_FALSE(dominates(Partition({2, 2}), Partition({3, 1})));
  EXPECT_FALSE(dominates(Partition({3, 3}), Partition({4, 1, 1})));
  EXPECT_FALSE(dominates(Partition({4, 1, 1}), Partition({3, 3})));
  EXPECT_THROW(dominates(Partition({2}), Partition({1})), std::invalid_argument);
}
