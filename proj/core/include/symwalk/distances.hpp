#pragma once

#include "symwalk/group_oracle.hpp"
#include "symwalk/numeric.hpp"
#include "symwalk/spectra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace symwalk {

enum class TimeMode { discrete, continuous };
std::string to_string(TimeMode m);

/// log d₂(q^(t), u)² = log Σ_{non-trivial} m β^{2t}. -inf when every
/// non-trivial eigenvalue is 0 and t > 0.
Real log_l2_sq_discrete(const Spectrum& s, std::uint64_t t);
/// log d₂(h_t, u)² = log Σ_{non-trivial} m e^{-2t(1-β)}.
Real log_l2_sq_continuous(const Spectrum& s, const Real& t);

/// d₂ in discrete time. Small cases (n <= 6, t <= 64) are summed exactly.
Real l2_discrete(const Spectrum& s, std::uint64_t t);
Real l2_continuous(const Spectrum& s, const Real& t);

/// The λ block alone: d_λ |β_λ|^t (discrete; t is rounded up) or
/// d_λ e^{-t(1-β_λ)}. Never exceeds the full distance.
Real l2_single_term_lower(const Partition& lambda, const ClassMeasure& q,
                          const Real& t, TimeMode mode);

struct DistancePoint {
  Real t;
  Real d2;
  Real log10_d2_sq;
};

struct DistanceProfile {
  std::string walk;
  Group group = Group::Sn;
  int n = 0;
  TimeMode mode = TimeMode::discrete;
  std::vector<DistancePoint> points;
};

/// Evaluates the spectrum at each time. Discrete times are rounded up to
/// the next integer, matching how step thresholds are applied.
DistanceProfile build_profile(const Spectrum& s, const std::string& walk,
                              const std::vector<Real>& times, TimeMode mode);

/// Definitional d₂ = (|G| Σ (p - 1/|G|)²)^{1/2}. Throws unless the law
/// sums to 1 within 1e-12.
template <class T>
Real chi_square_of(const GroupDistributionT<T>& dist);
/// ½ Σ |p - 1/|G||.
template <class T>
Real tv_of(const GroupDistributionT<T>& dist);

/// The same two distances against the uniform law on A_n. The input must
/// put no more than 1e-12 mass off A_n.
Real chi_square_on_an(const GroupDistribution& dist, const SymmetricGroup& g);
Real tv_on_an(const GroupDistribution& dist, const SymmetricGroup& g);

}  // namespace symwalk
