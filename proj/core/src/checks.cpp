#include "symwalk/checks.hpp"

#include "symwalk/distances.hpp"
#include "symwalk/group_oracle.hpp"
#include "symwalk/spectra.hpp"

#include <algorithm>
#include <optional>

namespace symwalk {

namespace {

template <class T>
GroupDistributionT<T> oracle_measure(const std::string& walk, const SymmetricGroup& g,
                                     const std::optional<ClassMeasure>& cm) {
  if (cm) return element_measure<T>(*cm, g);
  if (walk == "ttr") return ttr_element_measure<T>(g);
  return ri_element_measure<T>(g);
}

}  // namespace

OracleAgreement oracle_agreement(const std::string& walk, int n, unsigned t_max,
                                 const std::vector<Real>& continuous_times) {
  if (n > kMaxDenseDegree)
    throw ResourceLimitError("oracle agreement checks are limited to n <= " +
                             std::to_string(kMaxDenseDegree));
  const SymmetricGroup g(n);
  std::optional<ClassMeasure> cm;
  if (walk != "ttr" && walk != "ri") cm = class_measure_from_name(walk, n);

  OracleAgreement out;
  out.walk = walk;
  out.n = n;
  out.exact_mode = n <= kMaxExactOracleDegree;
  out.character_spectrum = cm.has_value();
  out.min_tv_margin = std::numeric_limits<Real>::infinity();

  std::optional<Spectrum> spec;
  std::vector<double> eig;
  if (cm)
    spec = spectrum(*cm, Group::Sn);
  else
    eig = operator_eigenvalues(oracle_measure<Real>(walk, g, cm), g);

  auto predicted = [&](const Real& t, bool continuous) -> Real {
    if (spec)
      return continuous ? l2_continuous(*spec, t)
                        : l2_discrete(*spec, static_cast<std::uint64_t>(t));
    return l2_from_eigenvalues(eig, t, continuous);
  };
  auto record = [&](Real& worst, const Real& chi, const Real& tv, const Real& expect) {
    worst = std::max(worst, Real(abs(chi - expect)));
    out.min_tv_margin = std::min(out.min_tv_margin, Real(chi - 2 * tv));
  };

  if (out.exact_mode) {
    const auto laws = convolution_powers(oracle_measure<Rational>(walk, g, cm), g, t_max);
    for (unsigned t = 0; t <= t_max; ++t)
      record(out.max_discrete_error, chi_square_of(laws[t]), tv_of(laws[t]), predicted(Real(t), false));
  } else {
    const auto laws = convolution_powers(oracle_measure<Real>(walk, g, cm), g, t_max);
    for (unsigned t = 0; t <= t_max; ++t)
      record(out.max_discrete_error, chi_square_of(laws[t]), tv_of(laws[t]), predicted(Real(t), false));
  }

  const auto laws = continuous_laws(oracle_measure<Real>(walk, g, cm), g, continuous_times,
                                    Real(1e-20));
  for (std::size_t i = 0; i < laws.size(); ++i)
    record(out.max_continuous_error, chi_square_of(laws[i].law), tv_of(laws[i].law),
           predicted(continuous_times[i], true));
  return out;
}

}  // namespace symwalk
