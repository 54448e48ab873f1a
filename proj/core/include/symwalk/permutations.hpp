#pragma once

// Dense enumeration of S_n for small n.
//
// Permutations are 0-based arrays p with p[i] the image of i. Products
// compose right to left: (s * t)(i) = s(t(i)). Elements are indexed by
// Lehmer code in lexicographic order, so index 0 is the identity.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace symwalk {

using Perm = std::vector<int>;

/// Largest degree the dense enumeration accepts.
inline constexpr int kMaxOracleDegree = 8;

Perm compose(const Perm& s, const Perm& t);
Perm inverse(const Perm& p);
int fixed_points(const Perm& p);
bool is_even(const Perm& p);
/// Sorted cycle lengths including 1s.
std::vector<int> cycle_lengths(const Perm& p);

class SymmetricGroup {
 public:
  /// Throws ResourceLimitError for n > kMaxOracleDegree.
  explicit SymmetricGroup(int n);

  int n() const { return n_; }
  std::size_t order() const { return order_; }

  Perm element(std::size_t index) const;
  std::size_t rank(const Perm& p) const;

  /// Index of x * s for every x, i.e. the right-multiplication map by s.
  std::vector<std::uint32_t> right_multiplication(const Perm& s) const;
  std::size_t inverse_index(std::size_t index) const { return inverse_[index]; }

 private:
  int n_;
  std::size_t order_;
  std::vector<std::uint8_t> table_;  // order_ rows of n_ images
  std::vector<std::uint32_t> inverse_;
};

}  // namespace symwalk
