// Randomised invariants. Each test draws its cases from a fixed seed so a
// failure reproduces exactly.

#include "symwalk/characters.hpp"
#include "symwalk/distances.hpp"
#include "symwalk/group_oracle.hpp"
#include "symwalk/spectra.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace symwalk;

namespace {

Partition random_partition(std::mt19937_64& rng, int n) {
  const auto all = enumerate_partitions(n);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

CycleType random_class(std::mt19937_64& rng, int n) {
  return CycleType(random_partition(rng, n).parts());
}

}  // namespace

TEST(Properties, ConjugationIsAnInvolutionReversingDominance) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 20);
    const Partition a = random_partition(rng, n), b = random_partition(rng, n);
    EXPECT_EQ(conjugate(conjugate(a)), a);
    EXPECT_EQ(dimension(a), dimension(conjugate(a)));
    EXPECT_EQ(dominates(a, b), dominates(conjugate(b), conjugate(a)));
  }
}

TEST(Properties, ConjugateCharacterCarriesSign) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 16);
    const Partition lambda = random_partition(rng, n);
    const CycleType alpha = random_class(rng, n);
    const BigInt sign = alpha.is_even() ? 1 : -1;
    EXPECT_EQ(character(conjugate(lambda), alpha), sign * character(lambda, alpha));
  }
}

TEST(Properties, CharacterRatiosLieInUnitInterval) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 18);
    const Rational r = char_ratio(random_partition(rng, n), random_class(rng, n));
    EXPECT_LE(abs(r), Rational(1));
  }
}

TEST(Properties, DominanceOrdersMomentsAndTranspositionRatios) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    const Partition a = random_partition(rng, n), b = random_partition(rng, n);
    if (!dominates(a, b)) continue;
    for (int l : {1, 2, 3}) EXPECT_GE(m_moment(a, l), m_moment(b, l)) << a.to_string() << b.to_string();
    EXPECT_GE(char_ratio(a, CycleType::cycle(2, n)), char_ratio(b, CycleType::cycle(2, n)));
  }
}

TEST(Properties, EigenvaluesAreBoundedAndTrivialIsOne) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const int k = 2 + static_cast<int>(rng() % (n - 1));
    const auto q = uniform_class_measure(CycleType::cycle(k, n));
    for (const auto& e : spectrum(q, Group::Sn).entries) {
      EXPECT_LE(abs(e.beta), Rational(1));
      if (e.trivial) EXPECT_EQ(e.beta, Rational(1));
    }
  }
}

TEST(Properties, ChiSquareDominatesTotalVariationOnWalkLaws) {
  std::mt19937_64 rng(6);
  for (int n = 3; n <= 5; ++n) {
    const SymmetricGroup g(n);
    for (int trial = 0; trial < 6; ++trial) {
      const int k = 2 + static_cast<int>(rng() % (n - 1));
      const auto q = element_measure<Real>(uniform_class_measure(CycleType::cycle(k, n)), g);
      const auto powers = convolution_powers(q, g, 10);
      for (const auto& p : powers) EXPECT_LE(2 * tv_of(p), chi_square_of(p) * (1 + Real(1e-25)));
    }
  }
}

TEST(Properties, SpectralDistanceIsNonIncreasingInTime) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 20);
    const auto q = lazy_class_measure(CycleType::cycle(3, n), Rational(1 + static_cast<long>(rng() % 8), 10));
    const auto s = spectrum(q, Group::An);
    Real prev = l2_discrete(s, 0);
    for (std::uint64_t t = 1; t <= 40; ++t) {
      const Real cur = l2_discrete(s, t);
      EXPECT_LE(cur, prev * (1 + Real(1e-30)));
      prev = cur;
    }
  }
}
