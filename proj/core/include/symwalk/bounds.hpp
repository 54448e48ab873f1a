#pragma once

#include "symwalk/numeric.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symwalk {

/// One inequality, computed <= guaranteed, checked with zero tolerance.
struct BoundReport {
  std::string name;
  int n = 0;
  std::optional<Real> c;
  std::optional<Real> t;
  Real guaranteed = 0;
  Real computed = 0;
  bool pass = false;
  std::vector<std::pair<std::string, Real>> terms;
};

/// Discrete random-transposition terms, indexed by j (entry 0 unused):
///   A_j = (n!/(n-j)!)² (1/j!) (1 - (2j/n)(1 - (j-1)/n))^{n log n}
///   B_j = (n!/(n-j)!)² (1/j!) (1 - j/n)^{n log n}
/// φ0 sums A over j <= floor(n/4), φ1 over ceil(n/4)..floor(n/2), and
/// φ2 sums B over ceil(n/2)..n.
struct RtDiscreteTerms {
  int n = 0;
  std::vector<Real> a;
  std::vector<Real> b;
  Real phi0 = 0, phi1 = 0, phi2 = 0;
};
/// Needs n >= 14.
RtDiscreteTerms rt_discrete_terms(int n);
/// φ2 alone, whose estimate is stated from n >= 9.
Real rt_discrete_phi2(int n);

/// Continuous-time terms:
///   A_j = (n!/(n-j)!)² (1/j!) exp(-2j log n (1 - j/n) - 2j)
///   B_j = (n!/(n-j)!)² (1/j!) exp(-j log n - 2j)
/// low = Σ_{j<=floor(n/4)} A_j, mid = Σ_{ceil(n/4)..floor(n/2)} A_j,
/// gamma = Σ_{ceil(n/2)..n} B_j.
struct RtContinuousTerms {
  int n = 0;
  std::vector<Real> a;
  std::vector<Real> b;
  Real low = 0, mid = 0, gamma = 0;
};
/// Needs n >= 10.
RtContinuousTerms rt_continuous_terms(int n);

/// Σ_{j=1}^{n-1} (n!/(n-j)!)² (1/j!) (1 - j/n)^{2t}.
Real ttr_bound_sum(int n, const Real& t);

/// The six lemma inequalities at one n: phi0, phi1, phi2 (n >= 14, phi2
/// from n >= 9) and cont_low, cont_mid, cont_gamma (n >= 10). Inequalities
/// outside their range are omitted.
std::vector<BoundReport> lemma_reports(int n);

enum class TheoremWalk { rt_discrete, rt_continuous, ttr, four_cycle, random_insertion };
std::string to_string(TheoremWalk w);
TheoremWalk parse_theorem_walk(const std::string& name);

/// Evaluates the walk's distance at the theorem's time threshold and
/// compares it with the guaranteed constant. Throws std::invalid_argument
/// outside the stated (n, c) range.
BoundReport theorem_bound(TheoremWalk walk, int n, const Real& c);

struct MatchingTail {
  Rational value;              ///< u(A_j): share of S_n with >= j fixed points
  std::optional<Real> bound;   ///< e^{-1}/(j-1)!, for j >= 2
};
MatchingTail matching_tail(int n, int j);

/// sqrt(2πn)(n/e)^n and e^{1/(12n)} times that.
std::pair<Real, Real> stirling_envelope(int n);

/// Whether 2 log(1-x) >= -w x.
bool calculus_claim(const Real& w, const Real& x);

}  // namespace symwalk
