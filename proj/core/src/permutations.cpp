#include "symwalk/permutations.hpp"

#include "symwalk/numeric.hpp"

#include <algorithm>
#include <numeric>

namespace symwalk {

Perm compose(const Perm& s, const Perm& t) {
  Perm r(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    r[i] = s[static_cast<std::size_t>(t[i])];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

int fixed_points(const Perm& p) {
  int c = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == static_cast<int>(i)) ++c;
  return c;
}

std::vector<int> cycle_lengths(const Perm& p) {
  std::vector<int> lengths;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end(), std::greater<>());
  return lengths;
}

bool is_even(const Perm& p) {
  int t = 0;
  for (int len : cycle_lengths(p)) t += len - 1;
  return t % 2 == 0;
}

SymmetricGroup::SymmetricGroup(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("SymmetricGroup needs n >= 1");
  if (n > kMaxOracleDegree)
    throw ResourceLimitError("dense group enumeration is limited to n <= " +
                             std::to_string(kMaxOracleDegree));
  order_ = 1;
  for (int i = 2; i <= n; ++i) order_ *= static_cast<std::size_t>(i);
  table_.resize(order_ * static_cast<std::size_t>(n));
  Perm p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::size_t idx = 0;
  do {
    std::copy(p.begin(), p.end(), table_.begin() + static_cast<std::ptrdiff_t>(idx * static_cast<std::size_t>(n)));
    ++idx;
  } while (std::next_permutation(p.begin(), p.end()));
  inverse_.resize(order_);
  for (std::size_t i = 0; i < order_; ++i)
    inverse_[i] = static_cast<std::uint32_t>(rank(inverse(element(i))));
}

Perm SymmetricGroup::element(std::size_t index) const {
  auto first = table_.begin() + static_cast<std::ptrdiff_t>(index * static_cast<std::size_t>(n_));
  return Perm(first, first + n_);
}

std::size_t SymmetricGroup::rank(const Perm& p) const {
  std::size_t r = 0;
  for (int i = 0; i < n_; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n_; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller;
    r = r * static_cast<std::size_t>(n_ - i) + static_cast<std::size_t>(smaller);
  }
  return r;
}

std::vector<std::uint32_t> SymmetricGroup::right_multiplication(const Perm& s) const {
  std::vector<std::uint32_t> out(order_);
  for (std::size_t x = 0; x < order_; ++x)
    out[x] = static_cast<std::uint32_t>(rank(compose(element(x), s)));
  return out;
}

}  // namespace symwalk
