#include "symwalk/characters.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <set>
#include <thread>

using namespace symwalk;

namespace {

std::vector<CycleType> all_classes(int n) {
  std::vector<CycleType> out;
  for (const auto& p : enumerate_partitions(n)) out.emplace_back(p.parts());
  return out;
}

using Cells = std::set<std::pair<int, int>>;

Cells cells_of(const std::vector<int>& rows) {
  Cells c;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < rows[static_cast<std::size_t>(i)]; ++j) c.insert({i, j});
  return c;
}

// Rim hooks by brute force: every k-subset of cells whose removal leaves a
// diagram, that is edge-connected and contains no 2x2 square.
std::multiset<std::pair<std::vector<int>, int>> brute_rim_hooks(const Partition& lambda, int k) {
  std::multiset<std::pair<std::vector<int>, int>> out;
  const Cells all = cells_of(lambda.parts());
  const std::vector<std::pair<int, int>> list(all.begin(), all.end());
  std::vector<bool> pick(list.size(), false);
  std::fill(pick.end() - k, pick.end(), true);
  do {
    Cells strip;
    std::vector<int> rows = lambda.parts();
    for (std::size_t i = 0; i < list.size(); ++i)
      if (pick[i]) {
        strip.insert(list[i]);
        --rows[static_cast<std::size_t>(list[i].first)];
      }
    bool diagram = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i] < 0 || (i + 1 < rows.size() && rows[i + 1] > rows[i])) diagram = false;
    }
    if (!diagram || cells_of(rows) != [&] {
          Cells rest = all;
          for (const auto& c : strip) rest.erase(c);
          return rest;
        }())
      continue;
    bool square = false;
    for (const auto& [r, c] : strip)
      square = square || (strip.count({r + 1, c}) && strip.count({r, c + 1}) &&
                          strip.count({r + 1, c + 1}));
    if (square) continue;
    Cells seen{*strip.begin()};
    std::vector<std::pair<int, int>> stack{*strip.begin()};
    while (!stack.empty()) {
      auto [r, c] = stack.back();
      stack.pop_back();
      for (auto nb : {std::pair{r + 1, c}, std::pair{r - 1, c}, std::pair{r, c + 1}, std::pair{r, c - 1}})
        if (strip.count(nb) && !seen.count(nb)) {
          seen.insert(nb);
          stack.push_back(nb);
        }
    }
    if (seen.size() != strip.size()) continue;
    std::set<int> strip_rows;
    for (const auto& cell : strip) strip_rows.insert(cell.first);
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    out.insert({rows, static_cast<int>(strip_rows.size()) - 1});
  } while (std::next_permutation(pick.begin(), pick.end()));
  return out;
}

// Number of λ-tabloids fixed by a permutation of cycle type α: ways of
// sending each cycle to a row so that row i receives λ_i points.
BigInt fixed_tabloids(const Partition& lambda, const CycleType& alpha) {
  std::vector<int> room = lambda.parts();
  const auto& cyc = alpha.cycles();
  std::function<BigInt(std::size_t)> go = [&](std::size_t i) -> BigInt {
    if (i == cyc.size()) return 1;
    BigInt total = 0;
    for (auto& r : room)
      if (r >= cyc[i]) {
        r -= cyc[i];
        total += go(i + 1);
        r += cyc[i];
      }
    return total;
  };
  return go(0);
}

// Kostka number K_{μ,λ}: semistandard tableaux of shape μ and content λ,
// peeling off the largest value as a horizontal strip.
BigInt kostka(std::vector<int> shape, std::vector<int> content) {
  while (!shape.empty() && shape.back() == 0) shape.pop_back();
  if (content.empty()) return shape.empty() ? 1 : 0;
  const int strip = content.back();
  content.pop_back();
  BigInt total = 0;
  std::function<void(std::size_t, int, std::vector<int>&)> go = [&](std::size_t row, int left,
                                                                     std::vector<int>& cur) {
    if (row == cur.size()) {
      if (left == 0) total += kostka(cur, content);
      return;
    }
    const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
    for (int take = 0; take <= std::min(left, shape[row] - below); ++take) {
      cur[row] = shape[row] - take;
      go(row + 1, left - take, cur);
    }
    cur[row] = shape[row];
  };
  std::vector<int> cur = shape;
  go(0, strip, cur);
  return total;
}

}  // namespace

TEST(CycleType, ParsingAndLabels) {
  const auto c = CycleType::parse("(4,2,2)", 10);
  EXPECT_EQ(c.cycles(), (std::vector<int>{4, 2, 2, 1, 1}));
  EXPECT_EQ(c.label(), "4,2,2");
  EXPECT_EQ(c.support(), 8);
  EXPECT_FALSE(c.is_even());
  EXPECT_TRUE(CycleType::parse("3,2,2", 8).is_even());
  EXPECT_EQ(c.transposition_length(), 5);
  EXPECT_EQ(CycleType::identity(5).label(), "1");
  EXPECT_EQ(CycleType::parse("3", 5).to_string(), "(3,1,1)");
  EXPECT_THROW(CycleType::parse("4,3", 6), std::invalid_argument);
  EXPECT_THROW(CycleType::parse("x", 6), std::invalid_argument);
}

TEST(CycleType, ClassSizesSumToOrder) {
  for (int n = 1; n <= 12; ++n) {
    BigInt total = 0;
    for (const auto& c : all_classes(n)) total += c.class_size();
    EXPECT_EQ(total, factorial(n));
  }
  EXPECT_EQ(CycleType::cycle(2, 6).class_size(), BigInt(15));
}

TEST(Characters, RimHooksMatchBruteForce) {
  for (int n = 1; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int k = 1; k <= n; ++k) {
        std::multiset<std::pair<std::vector<int>, int>> got;
        for (const auto& h : remove_skew_hooks(lambda, k)) got.insert({h.remainder.parts(), h.leg_length});
        EXPECT_EQ(got, brute_rim_hooks(lambda, k)) << lambda.to_string() << " k=" << k;
      }
}

TEST(Characters, PermutationModulesDecomposeByKostka) {
  for (int n = 1; n <= 8; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& lambda : parts)
      for (const auto& alpha : all_classes(n)) {
        BigInt sum = 0;
        for (const auto& mu : parts) sum += kostka(mu.parts(), lambda.parts()) * character(mu, alpha);
        EXPECT_EQ(sum, fixed_tabloids(lambda, alpha)) << lambda.to_string() << ' ' << alpha.to_string();
      }
  }
}

TEST(Characters, RowAndColumnOrthogonality) {
  for (int n = 2; n <= 9; ++n) {
    const auto parts = enumerate_partitions(n);
    const auto classes = all_classes(n);
    for (std::size_t a = 0; a < parts.size(); ++a)
      for (std::size_t b = a; b < parts.size(); ++b) {
        BigInt s = 0;
        for (const auto& c : classes) s += c.class_size() * character(parts[a], c) * character(parts[b], c);
        EXPECT_EQ(s, a == b ? factorial(n) : BigInt(0));
      }
    for (const auto& c : classes) {
      BigInt s = 0;
      for (const auto& p : parts) s += character(p, c) * character(p, c);
      EXPECT_EQ(s * c.class_size(), factorial(n));
    }
  }
}

TEST(Characters, FrobeniusTranspositionFormula) {
  for (int n = 2; n <= 16; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      const Partition conj = conjugate(lambda);
      BigInt num = 0;
      for (int x : lambda.parts()) num += BigInt(x) * (x - 1) / 2;
      for (int x : conj.parts()) num -= BigInt(x) * (x - 1) / 2;
      const Rational expect(num, binomial(n, 2));
      EXPECT_EQ(char_ratio(lambda, CycleType::cycle(2, n)), expect);
    }
}

TEST(Characters, KnownValues) {
  EXPECT_EQ(character(Partition({3, 1}), CycleType::parse("2", 4)), BigInt(1));
  EXPECT_EQ(character(Partition({2, 2}), CycleType::parse("3", 4)), BigInt(-1));
  EXPECT_EQ(character(Partition({2, 2}), CycleType::parse("4", 4)), BigInt(0));
  EXPECT_EQ(character(Partition({4, 4, 2}), CycleType::identity(10)), BigInt(252));
}

TEST(Characters, BoundedCacheStaysCorrect) {
  CharacterTable small(16);
  for (int n = 6; n <= 9; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (const auto& alpha : all_classes(n))
        ASSERT_EQ(small.character(lambda, alpha), character(lambda, alpha));
  EXPECT_LE(small.size(), 16u);
  small.clear();
  EXPECT_EQ(small.size(), 0u);
}

TEST(Characters, ConcurrentLookupsAgree) {
  CharacterTable table;
  const auto parts = enumerate_partitions(12);
  const auto classes = all_classes(12);
  std::vector<std::vector<BigInt>> results(4);
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < results.size(); ++w)
      pool.emplace_back([&, w] {
        for (const auto& p : parts) results[w].push_back(table.character(p, classes[(w * 7) % classes.size()]));
      });
  }
  for (std::size_t w = 0; w < results.size(); ++w)
    for (std::size_t i = 0; i < parts.size(); ++i)
      EXPECT_EQ(results[w][i], character(parts[i], classes[(w * 7) % classes.size()]));
}

TEST(Characters, FourCycleMomentIdentity) {
  for (int n = 4; n <= 14; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      EXPECT_EQ(r4_exact(lambda), char_ratio(lambda, CycleType::cycle(4, n))) << lambda.to_string();
  EXPECT_THROW(r4_exact(Partition({2, 1})), std::invalid_argument);
}

TEST(Characters, MomentBoundUpToTwelve) {
  for (int n = 1; n <= 12; ++n)
    for (const auto& lambda : enumerate_partitions(n))
      for (int l : {1, 2}) {
        const BigInt l1 = lambda.first();
        BigInt cap = n;
        for (int i = 0; i < l; ++i) cap *= l1 - 1;
        for (int i = 0; i < l - 1; ++i) cap *= l1;
        EXPECT_LE(m_moment(lambda, l), cap) << lambda.to_string() << " l=" << l;
      }
}

TEST(Characters, RatioBounds) {
  for (int n = 2; n <= 16; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      EXPECT_LE(char_ratio(lambda, CycleType::cycle(2, n)),
                char_ratio_bound(lambda, RatioClass::transposition))
          << lambda.to_string();
    }
  for (int n = 11; n <= 16; ++n)
    for (const auto& lambda : enumerate_partitions(n)) {
      EXPECT_LE(char_ratio(lambda, CycleType::cycle(4, n)),
                char_ratio_bound(lambda, RatioClass::four_cycle))
          << lambda.to_string();
    }
  EXPECT_THROW(char_ratio_bound(Partition({5, 5}), RatioClass::four_cycle), std::invalid_argument);
}

TEST(Characters, ShapeConstantIsFinite) {
  const Real d = ratio_shape_constant(near_square_partition(16), CycleType::cycle(3, 16));
  EXPECT_GT(d, 0);
  EXPECT_FALSE(isinf(d));
}
