#pragma once

// Template definitions for group_oracle.hpp; include that header instead.

#include "symwalk/characters.hpp"

#include <map>
#include <stdexcept>
#include <type_traits>

namespace symwalk {

namespace detail {

template <class T>
void guard_oracle_degree(int n) {
  const int cap = std::is_same_v<T, Rational> ? kMaxExactOracleDegree
                                              : kMaxRealOracleDegree;
  if (n > cap)
    throw ResourceLimitError("oracle convolutions in this mode are limited to n <= " +
                             std::to_string(cap));
}

}  // namespace detail

template <class T>
GroupDistributionT<T> element_measure(const ClassMeasure& q,
                                      const SymmetricGroup& g) {
  if (q.n != g.n()) throw std::invalid_argument("element_measure: degree mismatch");
  std::map<std::vector<int>, Rational> per_element;
  for (const auto& [cls, w] : q.atoms)
    per_element[cls.cycles()] += w / Rational(cls.class_size());
  GroupDistributionT<T> d{g.n(), std::vector<T>(g.order(), T(0))};
  for (std::size_t x = 0; x < g.order(); ++x) {
    auto it = per_element.find(cycle_lengths(g.element(x)));
    if (it != per_element.end()) d.values[x] = from_rational<T>(it->second);
  }
  return d;
}

template <class T>
GroupDistributionT<T> ttr_element_measure(const SymmetricGroup& g) {
  const int n = g.n();
  GroupDistributionT<T> d{n, std::vector<T>(g.order(), T(0))};
  const T w = from_rational<T>(Rational(1, n));
  d.values[0] += w;
  for (int i = 1; i < n; ++i) {
    Perm p(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) p[static_cast<std::size_t>(k)] = k;
    std::swap(p[0], p[static_cast<std::size_t>(i)]);
    d.values[g.rank(p)] += w;
  }
  return d;
}

template <class T>
GroupDistributionT<T> ri_element_measure(const SymmetricGroup& g) {
  const int n = g.n();
  GroupDistributionT<T> d{n, std::vector<T>(g.order(), T(0))};
  const T w = from_rational<T>(Rational(1, n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d.values[g.rank(insertion_cycle(i, j, n))] += w;
  return d;
}

template <class T>
GroupDistributionT<T> point_mass(const SymmetricGroup& g) {
  GroupDistributionT<T> d{g.n(), std::vector<T>(g.order(), T(0))};
  d.values[0] = T(1);
  return d;
}

template <class T>
ConvolutionOperator<T>::ConvolutionOperator(const GroupDistributionT<T>& q,
                                            const SymmetricGroup& g) {
  if (q.n != g.n() || q.values.size() != g.order())
    throw std::invalid_argument("ConvolutionOperator: degree mismatch");
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (q.values[s] == 0) continue;
    weights_.push_back(q.values[s]);
    const Perm p = g.element(s);
    right_.push_back(g.right_multiplication(p));
    right_inv_.push_back(g.right_multiplication(inverse(p)));
  }
}

template <class T>
std::vector<T> ConvolutionOperator<T>::convolve(const std::vector<T>& f) const {
  std::vector<T> out(f.size(), T(0));
  parallel_for(f.size(), [&](std::size_t x) {
    T acc = 0;
    for (std::size_t k = 0; k < weights_.size(); ++k)
      acc += weights_[k] * f[right_inv_[k][x]];
    out[x] = acc;
  });
  return out;
}

template <class T>
std::vector<T> ConvolutionOperator<T>::apply_kernel(const std::vector<T>& f) const {
  std::vector<T> out(f.size(), T(0));
  parallel_for(f.size(), [&](std::size_t x) {
    T acc = 0;
    for (std::size_t k = 0; k < weights_.size(); ++k)
      acc += weights_[k] * f[right_[k][x]];
    out[x] = acc;
  });
  return out;
}

template <class T>
std::vector<GroupDistributionT<T>> convolution_powers(
    const GroupDistributionT<T>& q, const SymmetricGroup& g, unsigned t_max) {
  detail::guard_oracle_degree<T>(g.n());
  const ConvolutionOperator<T> op(q, g);
  std::vector<GroupDistributionT<T>> out;
  out.reserve(t_max + 1);
  out.push_back(point_mass<T>(g));
  for (unsigned t = 1; t <= t_max; ++t)
    out.push_back({g.n(), op.convolve(out.back().values)});
  return out;
}

template <class T>
GroupDistributionT<T> convolution_power(const GroupDistributionT<T>& q,
                                        const SymmetricGroup& g, unsigned t) {
  detail::guard_oracle_degree<T>(g.n());
  const ConvolutionOperator<T> op(q, g);
  GroupDistributionT<T> cur = point_mass<T>(g);
  for (unsigned s = 0; s < t; ++s) cur.values = op.convolve(cur.values);
  return cur;
}

}  // namespace symwalk
