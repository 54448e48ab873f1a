#pragma once

// Brute-force ground truth on small S_n. Every law is a dense vector
// indexed by the Lehmer enumeration of SymmetricGroup. A walk step
// right-multiplies, X <- X * s, so the law after one more step is the
// convolution (f * q)(x) = Σ_y f(x y^-1) q(y).

#include "symwalk/numeric.hpp"
#include "symwalk/permutations.hpp"
#include "symwalk/spectra.hpp"

#include <cstdint>
#include <vector>

namespace symwalk {

/// Exact (Rational) oracle work is limited to n <= 5.
inline constexpr int kMaxExactOracleDegree = 5;
/// Floating convolutions are limited to n <= 7.
inline constexpr int kMaxRealOracleDegree = 7;
/// Dense eigenproblems are limited to n <= 6.
inline constexpr int kMaxDenseDegree = 6;

template <class T>
struct GroupDistributionT {
  int n = 0;
  std::vector<T> values;
};
using GroupDistribution = GroupDistributionT<Real>;
using ExactDistribution = GroupDistributionT<Rational>;

struct GroupFunction {
  int n = 0;
  std::vector<Real> values;
};

template <class T>
T from_rational(const Rational& r) {
  if constexpr (std::is_same_v<T, Rational>)
    return r;
  else
    return to_real(r);
}

/// c_{i,j}: the card at position i moves to position j, the cards in
/// between shift by one. c_{i,i} is the identity.
Perm insertion_cycle(int i, int j, int n);

/// Per-element law of a class measure.
template <class T>
GroupDistributionT<T> element_measure(const ClassMeasure& q,
                                      const SymmetricGroup& g);
/// Transpose top with random: mass 1/n on e and on each (0 i).
template <class T>
GroupDistributionT<T> ttr_element_measure(const SymmetricGroup& g);
/// Random insertion: each ordered pair (i,j) contributes c_{i,j} with 1/n².
template <class T>
GroupDistributionT<T> ri_element_measure(const SymmetricGroup& g);

template <class T>
GroupDistributionT<T> point_mass(const SymmetricGroup& g);

/// Convolution by a fixed measure, with the right-multiplication maps of
/// its support precomputed.
template <class T>
class ConvolutionOperator {
 public:
  ConvolutionOperator(const GroupDistributionT<T>& q, const SymmetricGroup& g);

  /// (f * q)(x) = Σ_s q(s) f(x s^-1).
  std::vector<T> convolve(const std::vector<T>& f) const;
  /// (K f)(x) = Σ_s q(s) f(x s), the kernel K(x,y) = q(x^-1 y).
  std::vector<T> apply_kernel(const std::vector<T>& f) const;

  std::size_t support_size() const { return weights_.size(); }
  const std::vector<T>& weights() const { return weights_; }
  const std::vector<std::uint32_t>& times(std::size_t k) const { return right_[k]; }
  const std::vector<std::uint32_t>& times_inverse(std::size_t k) const {
    return right_inv_[k];
  }

 private:
  std::vector<T> weights_;
  std::vector<std::vector<std::uint32_t>> right_;
  std::vector<std::vector<std::uint32_t>> right_inv_;
};

template <class T>
GroupDistributionT<T> convolution_power(const GroupDistributionT<T>& q,
                                        const SymmetricGroup& g, unsigned t);

/// Laws q^(0..t_max), in order.
template <class T>
std::vector<GroupDistributionT<T>> convolution_powers(
    const GroupDistributionT<T>& q, const SymmetricGroup& g, unsigned t_max);

struct ContinuousLaw {
  GroupDistribution law;
  unsigned truncation = 0;  ///< last Poisson index kept
  Real omitted_mass = 0;    ///< Poisson tail beyond the truncation
};

/// e^{-t} Σ_{s<=T} t^s/s! q^(s), with T the first index whose Poisson
/// tail falls below tail_tol.
ContinuousLaw continuous_law(const GroupDistribution& q, const SymmetricGroup& g,
                             const Real& t, const Real& tail_tol);
/// Same for several times, sharing the convolution powers.
std::vector<ContinuousLaw> continuous_laws(const GroupDistribution& q,
                                           const SymmetricGroup& g,
                                           const std::vector<Real>& times,
                                           const Real& tail_tol);

// --- eigenfunctions and Dirichlet forms ------------------------------------

GroupFunction constant_function(const SymmetricGroup& g, const Real& value = 1);
/// Number of fixed points minus one.
GroupFunction fixed_point_function(const SymmetricGroup& g);
/// sqrt((n-1)/(n-2)) times φ-2 where σ(0)=0 and φ-1+1/(n-1) elsewhere.
/// Needs n >= 3.
GroupFunction ttr_eigenfunction(const SymmetricGroup& g);
/// -n + 4/(n-1)² Σ_j σ(j) j, positions 0..n-1. Needs n >= 2.
GroupFunction ri_wilson_function(const SymmetricGroup& g);
/// Σ_σ f(σ)² for the function above, computed exactly.
Rational ri_wilson_square_sum_exact(int n);

/// max_x |(f * q)(x) - β f(x)|.
Real eigenfunction_residual(const GroupFunction& f, const GroupDistribution& q,
                            const SymmetricGroup& g, const Real& beta);

/// max_x ½ Σ_y (f(x) - f(y))² K(x,y).
Real square_gradient_sup(const GroupFunction& f, const GroupDistribution& q,
                         const SymmetricGroup& g);

/// E(f,f) under the uniform measure.
Real dirichlet_form(const GroupDistribution& q, const GroupFunction& f,
                    const SymmetricGroup& g);

/// Smallest eigenvalue of A(I - K_q) - (I - K_qt); nonnegative iff
/// E_qt <= A E_q. Both measures must be symmetric. n <= kMaxDenseDegree.
double comparison_gap(const GroupDistribution& q, const GroupDistribution& qt,
                      const Real& a, const SymmetricGroup& g);

/// All eigenvalues of K_q, descending. q must be symmetric;
/// n <= kMaxDenseDegree.
std::vector<double> operator_eigenvalues(const GroupDistribution& q,
                                         const SymmetricGroup& g);

/// d₂ from an operator's eigenvalues with the top (β = 1) one removed:
/// discrete uses β^{2t}, continuous uses e^{-2t(1-β)}.
Real l2_from_eigenvalues(const std::vector<double>& eigenvalues, const Real& t,
                         bool continuous);

}  // namespace symwalk

#include "symwalk/group_oracle_impl.hpp"
