#pragma once

#include "symwalk/numeric.hpp"
#include "symwalk/partitions.hpp"

#include <cstddef>
#include <list>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace symwalk {

/// Conjugacy-class label of S_n: cycle lengths, non-increasing, fixed
/// points included as 1s.
class CycleType {
 public:
  CycleType() = default;
  /// Sorts the lengths; throws on a non-positive entry.
  explicit CycleType(std::vector<int> cycles);

  static CycleType identity(int n);
  /// One k-cycle plus n-k fixed points.
  static CycleType cycle(int k, int n);
  /// Parses "4", "4,2,2" or "(4,2,2)" and pads with fixed points up to n.
  /// Throws std::invalid_argument if the lengths exceed n.
  static CycleType parse(const std::string& text, int n);

  const std::vector<int>& cycles() const { return cycles_; }
  int n() const { return n_; }
  int support() const;
  bool is_identity() const { return support() == 0; }
  bool is_even() const;
  /// Minimal number of transpositions: n minus the number of cycles.
  int transposition_length() const { return n_ - static_cast<int>(cycles_.size()); }
  BigInt class_size() const;
  /// "(4,2,2,1)"
  std::string to_string() const;
  /// "4,2,2", fixed points dropped; "1" for the identity.
  std::string label() const;

  friend bool operator==(const CycleType&, const CycleType&) = default;

 private:
  std::vector<int> cycles_;
  int n_ = 0;
};

struct SkewHookRemoval {
  Partition remainder;
  int leg_length;
};

/// All rim hooks of size k in λ, one per cell of hook length k.
std::vector<SkewHookRemoval> remove_skew_hooks(const Partition& lambda, int k);

/// Memoised Murnaghan-Nakayama evaluator. Safe for concurrent use; racing
/// threads may duplicate work but never lose an inserted entry.
class CharacterTable {
 public:
  /// max_entries == 0 means unbounded; otherwise least-recently-used
  /// entries are evicted past the cap.
  explicit CharacterTable(std::size_t max_entries = 0);

  BigInt character(const Partition& lambda, const CycleType& alpha);
  std::size_t size() const;
  void clear();

 private:
  using Key = std::vector<int>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };
  struct Entry {
    BigInt value;
    std::list<Key>::iterator position;
  };

  BigInt evaluate(const Partition& lambda, const std::vector<int>& cycles,
                  std::size_t from);
  bool lookup(const Key& key, BigInt& out);
  void store(const Key& key, const BigInt& value);

  std::size_t max_entries_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<Key, Entry, KeyHash> memo_;
  std::list<Key> recency_;  // front = most recent; maintained only when capped
};

/// Process-wide unbounded table used by the free functions below.
CharacterTable& shared_character_table();

BigInt character(const Partition& lambda, const CycleType& alpha);
/// χ_λ(α)/d_λ, reduced.
Rational char_ratio(const Partition& lambda, const CycleType& alpha);

/// M_{λ,2l} = Σ_j [(λ_j-j)^l (λ_j-j+1)^l - j^l (j-1)^l] over the rows of λ.
BigInt m_moment(const Partition& lambda, int l);
/// The 4-cycle ratio from the moment identity; requires n >= 4.
Rational r4_exact(const Partition& lambda);

enum class RatioClass { transposition, four_cycle };

/// Upper bound on the ratio at the given class, split at λ_1 >= n/2.
/// four_cycle requires n >= 11.
Rational char_ratio_bound(const Partition& lambda, RatioClass kind);

/// The smallest D with |χ_λ(σ)/d_λ| <= (D max(1,|σ|²/n)/√n)^{|σ|}.
/// Reported as a shape statistic only; no constant is claimed.
Real ratio_shape_constant(const Partition& lambda, const CycleType& alpha);

}  // namespace symwalk
