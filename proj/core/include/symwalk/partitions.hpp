#pragma once

#include "symwalk/numeric.hpp"

#include <compare>
#include <string>
#include <vector>

namespace symwalk {

/// A Young diagram: non-increasing positive parts. Rows and columns are
/// 1-based in the accessors below, matching the (i,j) cell convention.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and non-increasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// λ_i for i >= 1; zero past the last row.
  int row(int i) const {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)]
                                   : 0;
  }
  int first() const { return row(1); }

  /// "(4,4,2)"; the empty partition prints as "()".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

struct HookCell {
  int row;
  int col;
  int hook_length;
};

/// All cells of λ with their hook lengths, row-major.
std::vector<HookCell> hook_cells(const Partition& lambda);

/// Every partition of n, reverse-lexicographic from (n).
std::vector<Partition> enumerate_partitions(int n);

Partition conjugate(const Partition& lambda);

/// d_λ via the hook-length formula; exact.
BigInt dimension(const Partition& lambda);

struct DimSquareSum {
  BigInt bound;  ///< C(n,l)^2 (n-l)!
  BigInt exact;  ///< sum of d_λ^2 over λ ⊢ n with λ_1 = l
};
DimSquareSum dim_square_sum_bound(int n, int l);

/// (n / (e(s+t-1)))^n, a lower bound for d_λ when λ fits an s-by-t box.
Real box_dim_lower_bound(const Partition& lambda, int s, int t);

/// floor(n/k) rows of length k = ceil(sqrt n), then a row of n mod k.
Partition near_square_partition(int n);
Partition staircase_partition(int m);

/// Dominance order. Throws on mismatched sizes.
bool dominates(const Partition& hi, const Partition& lo);

}  // namespace symwalk
