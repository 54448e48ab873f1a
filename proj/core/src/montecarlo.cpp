#include "symwalk/montecarlo.hpp"

#include "symwalk/bounds.hpp"
#include "symwalk/characters.hpp"

#include <boost/math/distributions/poisson.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>

namespace symwalk {

std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> ctr,
                                        std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kM0 = 0xD2511F53u, kM1 = 0xCD9E8D57u;
  constexpr std::uint32_t kW0 = 0x9E3779B9u, kW1 = 0xBB67AE85u;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
    const std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0],
           static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1],
           static_cast<std::uint32_t>(p0)};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

PhiloxStream::PhiloxStream(std::uint64_t seed, std::uint64_t trajectory)
    : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
      trajectory_(trajectory) {}

std::uint32_t PhiloxStream::next_u32() {
  if (used_ == 4) {
    buffer_ = philox4x32({static_cast<std::uint32_t>(block_),
                          static_cast<std::uint32_t>(block_ >> 32),
                          static_cast<std::uint32_t>(trajectory_),
                          static_cast<std::uint32_t>(trajectory_ >> 32)},
                         key_);
    ++block_;
    used_ = 0;
  }
  return buffer_[static_cast<std::size_t>(used_++)];
}

std::uint32_t PhiloxStream::below(std::uint32_t bound) {
  // Lemire's multiply-and-reject.
  std::uint64_t m = static_cast<std::uint64_t>(next_u32()) * bound;
  auto low = static_cast<std::uint32_t>(m);
  if (low < bound) {
    const std::uint32_t threshold = (0u - bound) % bound;
    while (low < threshold) {
      m = static_cast<std::uint64_t>(next_u32()) * bound;
      low = static_cast<std::uint32_t>(m);
    }
  }
  return static_cast<std::uint32_t>(m >> 32);
}

double PhiloxStream::unit() {
  const std::uint64_t hi = next_u32() >> 5;  // 27 bits
  const std::uint64_t lo = next_u32() >> 6;  // 26 bits
  return static_cast<double>((hi << 26) | lo) * 0x1.0p-53;
}

StepSampler::StepSampler(const std::string& walk, int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("samplers need n >= 2");
  auto class_cycles = [&](const std::string& text) {
    const CycleType ct = CycleType::parse(text, n);
    if (ct.is_identity()) throw std::invalid_argument("class walk on the identity class");
    for (int c : ct.cycles())
      if (c > 1) cycles_.push_back(c);
  };
  if (walk == "rt") {
    kind_ = Kind::rt;
  } else if (walk == "ttr") {
    kind_ = Kind::ttr;
  } else if (walk == "ri") {
    kind_ = Kind::ri;
  } else if (walk.rfind("class:", 0) == 0) {
    kind_ = Kind::cls;
    class_cycles(walk.substr(6));
  } else if (walk.rfind("lazy:", 0) == 0) {
    kind_ = Kind::lazy;
    const auto rest = walk.substr(5);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos) throw std::invalid_argument("lazy walk needs :<eps>");
    class_cycles(rest.substr(0, colon));
    eps_ = static_cast<double>(to_real(parse_rational(rest.substr(colon + 1))));
    if (!(eps_ > 0 && eps_ < 1)) throw std::invalid_argument("laziness must lie in (0,1)");
  } else {
    throw std::invalid_argument("unknown walk: " + walk);
  }
}

void StepSampler::step(std::vector<int>& x, PhiloxStream& rng) const {
  const auto un = static_cast<std::uint32_t>(n_);
  switch (kind_) {
    case Kind::rt: {
      const auto i = rng.below(un), j = rng.below(un);
      std::swap(x[i], x[j]);
      return;
    }
    case Kind::ttr:
      std::swap(x[0], x[rng.below(un)]);
      return;
    case Kind::ri: {
      // (x * c_{i,j})[k] = x[c_{i,j}(k)]: position i takes x[j] and the
      // block between shifts by one.
      const auto i = rng.below(un), j = rng.below(un);
      if (i < j)
        std::rotate(x.begin() + i, x.begin() + j, x.begin() + j + 1);
      else if (j < i)
        std::rotate(x.begin() + j, x.begin() + j + 1, x.begin() + i + 1);
      return;
    }
    case Kind::lazy:
      if (rng.unit() < eps_) return;
      [[fallthrough]];
    case Kind::cls: {
      // Conjugate a fixed representative by a uniform relabelling: pick
      // the support points by a partial Fisher-Yates shuffle.
      std::vector<int> pts(static_cast<std::size_t>(n_));
      std::iota(pts.begin(), pts.end(), 0);
      std::size_t pos = 0;
      std::vector<int> y = x;
      for (int len : cycles_) {
        for (int k = 0; k < len; ++k) {
          const auto pick = pos + rng.below(static_cast<std::uint32_t>(pts.size() - pos));
          std::swap(pts[pos], pts[pick]);
          ++pos;
        }
        // cycle a0 -> a1 -> ... -> a_{len-1} -> a0 on the chosen points
        const std::size_t start = pos - static_cast<std::size_t>(len);
        for (std::size_t k = start; k < pos; ++k) {
          const std::size_t next = k + 1 < pos ? k + 1 : start;
          y[static_cast<std::size_t>(pts[k])] = x[static_cast<std::size_t>(pts[next])];
        }
      }
      x.swap(y);
      return;
    }
  }
}

std::vector<int> StepSampler::draw(PhiloxStream& rng) const {
  std::vector<int> x(static_cast<std::size_t>(n_));
  std::iota(x.begin(), x.end(), 0);
  step(x, rng);
  return x;
}

SimResult sample_walk(const SimConfig& cfg) {
  if (cfg.samples < 1) throw std::invalid_argument("need at least one sample");
  if (cfg.j < 0 || cfg.j > cfg.n) throw std::invalid_argument("j must lie in [0, n]");
  const StepSampler sampler(cfg.walk, cfg.n);
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (cfg.samples + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> partial(
      blocks, std::vector<std::uint64_t>(static_cast<std::size_t>(cfg.n + 1), 0));
  std::atomic<std::uint64_t> finished{0};
  std::mutex progress_mutex;
  parallel_for(blocks, [&](std::size_t b) {
    const std::uint64_t lo = b * kBlock, hi = std::min(cfg.samples, lo + kBlock);
    std::vector<int> x(static_cast<std::size_t>(cfg.n));
    for (std::uint64_t traj = lo; traj < hi; ++traj) {
      PhiloxStream rng(cfg.seed, traj);
      std::iota(x.begin(), x.end(), 0);
      for (std::uint64_t s = 0; s < cfg.steps; ++s) sampler.step(x, rng);
      int fixed = 0;
      for (int k = 0; k < cfg.n; ++k)
        if (x[static_cast<std::size_t>(k)] == k) ++fixed;
      ++partial[b][static_cast<std::size_t>(fixed)];
    }
    const std::uint64_t before = finished.fetch_add(hi - lo);
    if (cfg.progress && (before + hi - lo) / 1000000 > before / 1000000) {
      std::lock_guard lock(progress_mutex);
      cfg.progress(before + hi - lo);
    }
  });
  SimResult r;
  r.samples = cfg.samples;
  r.histogram.assign(static_cast<std::size_t>(cfg.n + 1), 0);
  for (const auto& p : partial)
    for (std::size_t k = 0; k < p.size(); ++k) r.histogram[k] += p[k];
  std::uint64_t hits = 0;
  for (int k = cfg.j; k <= cfg.n; ++k) hits += r.histogram[static_cast<std::size_t>(k)];
  r.event_frequency = static_cast<double>(hits) / static_cast<double>(cfg.samples);
  return r;
}

TvLowerEstimate fixed_point_tv_lower(int n, std::uint64_t t, int j, std::uint64_t samples,
                                     std::uint64_t seed, const std::string& walk,
                                     std::function<void(std::uint64_t)> progress) {
  if (j < 2 || j > n) throw std::invalid_argument("fixed_point_tv_lower needs 2 <= j <= n");
  if (samples < 1000) throw std::invalid_argument("at least 1000 samples are required");
  SimConfig cfg{n, walk, t, samples, seed, j, std::move(progress)};
  const SimResult sim = sample_walk(cfg);
  const Real u = to_real(matching_tail(n, j).value);
  const double p = sim.event_frequency;
  return {p - static_cast<double>(u),
          std::sqrt(p * (1 - p) / static_cast<double>(samples)), p, u, samples};
}

CouponStats coupon_stats(int n, int j, std::optional<Real> c) {
  if (j < 1 || j >= n) throw std::invalid_argument("coupon_stats needs 1 <= j < n");
  CouponStats s{0, 0, 0, 0, std::nullopt};
  const Real rn = n;
  for (int i = 1; i <= n - j - 1; ++i) {
    const Real gap = n - i;
    s.mean_exact += rn / gap;
    s.variance_exact += rn * Real(i) / (gap * gap);
  }
  s.mean_lower = rn * log(rn / Real(j + 1));
  s.variance_upper = rn * rn / Real(j);
  if (c && *c > log(Real(j + 1))) {
    const Real gap = *c - log(Real(j + 1));
    s.chebyshev_tail = 1 / (Real(j) * gap * gap);
  }
  return s;
}

double poisson_window_mass(double k, double alpha) {
  if (!(k > 0)) throw std::invalid_argument("poisson_window_mass needs k > 0");
  if (!(alpha > 0.5 && alpha < 1))
    throw std::invalid_argument("poisson_window_mass needs alpha in (1/2, 1)");
  const boost::math::poisson_distribution<double> dist(k);
  return boost::math::cdf(dist, std::floor(k + std::pow(k, alpha)));
}

}  // namespace symwalk
