#include "symwalk/bounds.hpp"
#include "symwalk/distances.hpp"
#include "symwalk/group_oracle.hpp"
#include "symwalk/montecarlo.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace symwalk;

// Known-answer vectors for Philox4x32-10.
TEST(Philox, KnownAnswers) {
  EXPECT_EQ(philox4x32({0, 0, 0, 0}, {0, 0}),
            (std::array<std::uint32_t, 4>{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
  EXPECT_EQ(philox4x32({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}),
            (std::array<std::uint32_t, 4>{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
  EXPECT_EQ(philox4x32({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
            (std::array<std::uint32_t, 4>{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(Philox, BoundedDrawsAreUniform) {
  PhiloxStream s(3, 0);
  std::vector<int> counts(7, 0);
  const int draws = 700000;
  for (int i = 0; i < draws; ++i) counts[s.below(7)]++;
  for (int c : counts) EXPECT_NEAR(c, draws / 7.0, 5 * std::sqrt(draws / 7.0));
  for (int i = 0; i < 1000; ++i) {
    const double u = s.unit();
    EXPECT_GE(u, 0);
    EXPECT_LT(u, 1);
  }
}

TEST(Philox, StreamsAreIndependentOfEachOther) {
  PhiloxStream a(1, 0), b(1, 1), a2(1, 0);
  bool differ = false;
  for (int i = 0; i < 16; ++i) {
    const auto x = a.next_u32();
    differ = differ || x != b.next_u32();
    EXPECT_EQ(x, a2.next_u32());
  }
  EXPECT_TRUE(differ);
}

TEST(MonteCarlo, TimeZeroFixesEverything) {
  SimConfig cfg;
  cfg.n = 30;
  cfg.walk = "rt";
  cfg.steps = 0;
  cfg.samples = 2000;
  cfg.j = 30;
  const auto r = sample_walk(cfg);
  EXPECT_EQ(r.histogram[30], 2000u);
  EXPECT_EQ(r.event_frequency, 1.0);
}

TEST(MonteCarlo, ReplayIsBitIdentical) {
  SimConfig cfg;
  cfg.n = 12;
  cfg.walk = "ri";
  cfg.steps = 17;
  cfg.samples = 5000;
  cfg.seed = 99;
  cfg.j = 2;
  const auto a = sample_walk(cfg), b = sample_walk(cfg);
  EXPECT_EQ(a.histogram, b.histogram);
  EXPECT_EQ(a.event_frequency, b.event_frequency);
  cfg.seed = 100;
  EXPECT_NE(sample_walk(cfg).histogram, a.histogram);
}

TEST(MonteCarlo, SamplersMatchElementMeasures) {
  const int draws = 1000000;
  for (int n : {3, 5}) {
    const SymmetricGroup g(n);
    std::vector<std::pair<std::string, GroupDistribution>> cases{
        {"rt", element_measure<Real>(random_transposition_measure(n), g)},
        {"ttr", ttr_element_measure<Real>(g)},
        {"ri", ri_element_measure<Real>(g)},
        {"class:3", element_measure<Real>(class_measure_from_name("class:3", n), g)},
        {"lazy:3:1/4", element_measure<Real>(class_measure_from_name("lazy:3:1/4", n), g)},
    };
    for (const auto& [walk, law] : cases) {
      const StepSampler sampler(walk, n);
      std::vector<double> hist(g.order(), 0);
      for (int i = 0; i < draws; ++i) {
        PhiloxStream rng(5, static_cast<std::uint64_t>(i));
        hist[g.rank(sampler.draw(rng))] += 1.0 / draws;
      }
      double tv = 0;
      for (std::size_t i = 0; i < g.order(); ++i) tv += std::abs(hist[i] - static_cast<double>(law.values[i]));
      EXPECT_LE(tv / 2, 4 / std::sqrt(draws)) << walk << " n=" << n;
    }
  }
}

TEST(MonteCarlo, LongRunApproachesMatchingTail) {
  SimConfig cfg;
  cfg.n = 30;
  cfg.walk = "rt";
  cfg.steps = 600;
  cfg.samples = 20000;
  cfg.seed = 4;
  cfg.j = 2;
  const auto r = sample_walk(cfg);
  const double u = static_cast<double>(to_real(matching_tail(30, 2).value));
  const double se = std::sqrt(u * (1 - u) / cfg.samples);
  EXPECT_NEAR(r.event_frequency, u, 3 * se);
}

TEST(MonteCarlo, LowerEstimateRespectsExactDistance) {
  const int n = 6;
  const SymmetricGroup g(n);
  const auto q = ttr_element_measure<Real>(g);
  const auto powers = convolution_powers(q, g, 12);
  const std::uint64_t N = 40000;
  for (unsigned t : {0u, 3u, 6u, 12u}) {
    const auto est = fixed_point_tv_lower(n, t, 2, N, 21, "ttr");
    EXPECT_LE(est.estimate, static_cast<double>(tv_of(powers[t])) + 3 * std::sqrt(1.0 / (4 * N))) << t;
  }
  const auto zero = fixed_point_tv_lower(n, 0, 3, 1000, 1);
  EXPECT_DOUBLE_EQ(zero.estimate, 1 - static_cast<double>(to_real(matching_tail(n, 3).value)));
  EXPECT_THROW(fixed_point_tv_lower(n, 1, 1, 1000, 1), std::invalid_argument);
  EXPECT_THROW(fixed_point_tv_lower(n, 1, 2, 999, 1), std::invalid_argument);
}

TEST(MonteCarlo, StationaryRegimeGivesNoSignal) {
  const auto est = fixed_point_tv_lower(20, 2000, 3, 20000, 8, "rt");
  EXPECT_LE(std::abs(est.estimate), 4 * est.standard_error + 1e-12);
}

TEST(MonteCarlo, CouponCollectorBounds) {
  const auto s = coupon_stats(100, 3, Real(5));
  EXPECT_GE(s.mean_exact, s.mean_lower);
  EXPECT_LE(s.variance_exact, s.variance_upper);
  ASSERT_TRUE(s.chebyshev_tail.has_value());
  EXPECT_LE(abs(*s.chebyshev_tail - 1 / (3 * pow(5 - log(Real(4)), 2))), Real(1e-30));
  EXPECT_EQ(coupon_stats(10, 9).mean_exact, Real(0));
  EXPECT_FALSE(coupon_stats(10, 3, Real(1)).chebyshev_tail.has_value());
  EXPECT_THROW(coupon_stats(10, 10), std::invalid_argument);
}

TEST(MonteCarlo, PoissonWindow) {
  EXPECT_GE(poisson_window_mass(100, 0.75), 0.99);
  EXPECT_LT(poisson_window_mass(100, 0.6), poisson_window_mass(100, 0.9));
  EXPECT_GT(poisson_window_mass(1e4, 0.6), poisson_window_mass(100, 0.6));
  EXPECT_THROW(poisson_window_mass(10, 0.4), std::invalid_argument);
}
