#pragma once

#include "symwalk/numeric.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace symwalk {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Independent stream for one trajectory: key = seed, counter =
/// (block, trajectory). No state is shared between streams.
class PhiloxStream {
 public:
  PhiloxStream(std::uint64_t seed, std::uint64_t trajectory);

  std::uint32_t next_u32();
  /// Uniform on [0, bound) without modulo bias; bound >= 1.
  std::uint32_t below(std::uint32_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double unit();

 private:
  std::array<std::uint32_t, 2> key_;
  std::uint64_t trajectory_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 4;
};

/// Walk names accepted by the samplers: "rt", "ttr", "ri",
/// "class:<cycle type>" and "lazy:<cycle type>:<eps>".
class StepSampler {
 public:
  StepSampler(const std::string& walk, int n);

  int n() const { return n_; }
  /// X <- X * ξ for a fresh increment ξ.
  void step(std::vector<int>& x, PhiloxStream& rng) const;
  /// A fresh increment on its own (starting from the identity).
  std::vector<int> draw(PhiloxStream& rng) const;

 private:
  enum class Kind { rt, ttr, ri, cls, lazy };
  Kind kind_;
  int n_;
  std::vector<int> cycles_;  // non-trivial cycle lengths for class walks
  double eps_ = 0;
  std::vector<int> scratch_;
};

struct SimConfig {
  int n = 0;
  std::string walk = "ttr";
  std::uint64_t steps = 0;
  std::uint64_t samples = 1;
  std::uint64_t seed = 0;
  int j = 1;
  /// Called with the running trajectory count every 10^6 trajectories.
  std::function<void(std::uint64_t)> progress;
};

struct SimResult {
  std::vector<std::uint64_t> histogram;  ///< counts of φ(X_t) = 0..n
  std::uint64_t samples = 0;
  double event_frequency = 0;  ///< share of trajectories with φ >= j
};

/// Runs the trajectories in fixed blocks; the result depends only on cfg.
SimResult sample_walk(const SimConfig& cfg);

struct TvLowerEstimate {
  double estimate;        ///< q^(t)(A_j) - u(A_j)
  double standard_error;  ///< normal approximation
  double empirical;       ///< q^(t)(A_j)
  Real uniform_mass;      ///< u(A_j), exact
  std::uint64_t samples;
};

/// Needs 2 <= j <= n and samples >= 1000.
TvLowerEstimate fixed_point_tv_lower(int n, std::uint64_t t, int j,
                                     std::uint64_t samples, std::uint64_t seed,
                                     const std::string& walk = "ttr",
                                     std::function<void(std::uint64_t)> progress = {});

struct CouponStats {
  Real mean_exact;       ///< Σ_{i=1}^{n-j-1} n/(n-i)
  Real mean_lower;       ///< n log(n/(j+1))
  Real variance_exact;   ///< Σ_{i=1}^{n-j-1} n i/(n-i)²
  Real variance_upper;   ///< n²/j
  std::optional<Real> chebyshev_tail;  ///< 1/(j (c - log(j+1))²) when c > log(j+1)
};
/// Needs 1 <= j < n.
CouponStats coupon_stats(int n, int j, std::optional<Real> c = std::nullopt);

/// P(X <= k + k^α) for X ~ Poisson(k); k > 0, α in (1/2, 1).
double poisson_window_mass(double k, double alpha);

}  // namespace symwalk
