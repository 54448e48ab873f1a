#include "symwalk/distances.hpp"

#include <cmath>

namespace symwalk {

std::string to_string(TimeMode m) {
  return m == TimeMode::discrete ? "discrete" : "continuous";
}

namespace {

const Real kLn10 = log(Real(10));

// Per-entry log terms are independent, so they are filled in parallel and
// reduced in a fixed order.
template <class Term>
Real log_spectral_sum(const Spectrum& s, Term&& term) {
  std::vector<Real> logs(s.entries.size(), neg_infinity());
  parallel_for(s.entries.size(), [&](std::size_t i) {
    const auto& e = s.entries[i];
    if (e.trivial) return;
    logs[i] = term(e);
  });
  return log_sum_exp(logs);
}

bool exact_path(const Spectrum& s, std::uint64_t t) { return s.n <= 6 && t <= 64; }

}  // namespace

Real log_l2_sq_discrete(const Spectrum& s, std::uint64_t t) {
  return log_spectral_sum(s, [&](const SpectrumEntry& e) -> Real {
    const Real logm = log_of(e.multiplicity);
    if (t == 0) return logm;
    if (e.beta == 0) return neg_infinity();
    return logm + Real(2 * t) * log(abs(to_real(e.beta)));
  });
}

Real log_l2_sq_continuous(const Spectrum& s, const Real& t) {
  if (t < 0) throw std::invalid_argument("continuous time must be >= 0");
  return log_spectral_sum(s, [&](const SpectrumEntry& e) -> Real {
    return log_of(e.multiplicity) - 2 * t * to_real(Rational(1 - e.beta));
  });
}

Real l2_discrete(const Spectrum& s, std::uint64_t t) {
  if (exact_path(s, t)) {
    Rational sum = 0;
    for (const auto& e : s.entries) {
      if (e.trivial) continue;
      sum += Rational(e.multiplicity) * rational_pow(e.beta * e.beta, static_cast<unsigned>(t));
    }
    return sqrt(to_real(sum));
  }
  return exp(log_l2_sq_discrete(s, t) / 2);
}

Real l2_continuous(const Spectrum& s, const Real& t) {
  return exp(log_l2_sq_continuous(s, t) / 2);
}

Real l2_single_term_lower(const Partition& lambda, const ClassMeasure& q,
                          const Real& t, TimeMode mode) {
  if (lambda == Partition({lambda.n()}))
    throw std::invalid_argument("single-term bound needs a non-trivial partition");
  if (t < 0) throw std::invalid_argument("time must be >= 0");
  const Real logd = log_of(dimension(lambda));
  const Rational beta = walk_eigenvalue(q, lambda);
  if (mode == TimeMode::continuous)
    return exp(logd - t * to_real(Rational(1 - beta)));
  const Real steps = ceil(t);
  if (steps == 0) return exp(logd);
  if (beta == 0) return 0;
  return exp(logd + steps * log(abs(to_real(beta))));
}

DistanceProfile build_profile(const Spectrum& s, const std::string& walk,
                              const std::vector<Real>& times, TimeMode mode) {
  DistanceProfile p{walk, s.group, s.n, mode, {}};
  for (const Real& raw : times) {
    if (raw < 0) throw std::invalid_argument("profile times must be >= 0");
    Real t = raw;
    Real logsq;
    if (mode == TimeMode::discrete) {
      t = ceil(raw);
      const auto steps = static_cast<std::uint64_t>(t);
      logsq = exact_path(s, steps) ? Real(2 * log(l2_discrete(s, steps)))
                                   : log_l2_sq_discrete(s, steps);
    } else {
      logsq = log_l2_sq_continuous(s, t);
    }
    p.points.push_back({t, exp(logsq / 2), logsq / kLn10});
  }
  return p;
}

namespace {

Real as_real(const Real& x) { return x; }
Real as_real(const Rational& x) { return to_real(x); }

template <class T>
void check_normalised(const GroupDistributionT<T>& dist) {
  T total = 0;
  for (const T& v : dist.values) {
    if (v < 0) throw std::invalid_argument("distribution has a negative entry");
    total += v;
  }
  if (abs(as_real(T(total - 1))) > Real(1e-12))
    throw std::invalid_argument("distribution is not normalised");
}

}  // namespace

template <class T>
Real chi_square_of(const GroupDistributionT<T>& dist) {
  check_normalised(dist);
  const auto order = dist.values.size();
  const T u = T(1) / T(static_cast<long>(order));
  T sum = 0;
  for (const T& v : dist.values) sum += (v - u) * (v - u);
  return sqrt(as_real(T(sum * T(static_cast<long>(order)))));
}

template <class T>
Real tv_of(const GroupDistributionT<T>& dist) {
  check_normalised(dist);
  const auto order = dist.values.size();
  const T u = T(1) / T(static_cast<long>(order));
  T sum = 0;
  for (const T& v : dist.values) sum += v > u ? T(v - u) : T(u - v);
  return as_real(sum) / 2;
}

template Real chi_square_of(const GroupDistributionT<Real>&);
template Real chi_square_of(const GroupDistributionT<Rational>&);
template Real tv_of(const GroupDistributionT<Real>&);
template Real tv_of(const GroupDistributionT<Rational>&);

namespace {

// Values restricted to A_n, after checking the odd coset is empty.
std::vector<Real> restrict_to_an(const GroupDistribution& dist, const SymmetricGroup& g) {
  if (dist.values.size() != g.order())
    throw std::invalid_argument("distribution does not match the group");
  check_normalised(dist);
  std::vector<Real> even;
  Real odd_mass = 0;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (is_even(g.element(x)))
      even.push_back(dist.values[x]);
    else
      odd_mass += dist.values[x];
  }
  if (odd_mass > Real(1e-12))
    throw std::invalid_argument("distribution is not supported on A_n");
  return even;
}

}  // namespace

Real chi_square_on_an(const GroupDistribution& dist, const SymmetricGroup& g) {
  const auto even = restrict_to_an(dist, g);
  const Real u = Real(1) / Real(even.size());
  Real sum = 0;
  for (const Real& v : even) sum += (v - u) * (v - u);
  return sqrt(sum * Real(even.size()));
}

Real tv_on_an(const GroupDistribution& dist, const SymmetricGroup& g) {
  const auto even = restrict_to_an(dist, g);
  const Real u = Real(1) / Real(even.size());
  Real sum = 0;
  for (const Real& v : even) sum += abs(v - u);
  return sum / 2;
}

}  // namespace symwalk
