#include "symwalk/partitions.hpp"

#include <boost/math/constants/constants.hpp>

#include <cmath>
#include <sstream>

namespace symwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be non-increasing");
    n_ += parts_[i];
  }
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

std::vector<HookCell> hook_cells(const Partition& lambda) {
  const Partition conj = conjugate(lambda);
  std::vector<HookCell> cells;
  cells.reserve(static_cast<std::size_t>(lambda.n()));
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.row(i); ++j)
      cells.push_back({i, j, (lambda.row(i) - j) + (conj.row(j) - i) + 1});
  return cells;
}

namespace {

void enumerate_into(int remaining, int cap, std::vector<int>& prefix,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part) {
    prefix.push_back(part);
    enumerate_into(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> prefix;
  enumerate_into(n, n, prefix, out);
  return out;
}

BigInt dimension(const Partition& lambda) {
  if (lambda.n() < 1) throw std::invalid_argument("dimension of empty partition");
  BigInt hooks = 1;
  for (const HookCell& c : hook_cells(lambda)) hooks *= c.hook_length;
  const BigInt total = factorial(static_cast<unsigned>(lambda.n()));
  if (total % hooks != 0)
    throw std::logic_error("hook product does not divide n! for " +
                           lambda.to_string());
  return total / hooks;
}

DimSquareSum dim_square_sum_bound(int n, int l) {
  if (l < 1 || l > n) throw std::invalid_argument("dim_square_sum_bound: need 1 <= l <= n");
  const auto un = static_cast<unsigned>(n), ul = static_cast<unsigned>(l);
  const BigInt c = binomial(un, ul);
  DimSquareSum r{c * c * factorial(un - ul), 0};
  for (const Partition& p : enumerate_partitions(n - l)) {
    if (p.first() > l) continue;
    std::vector<int> parts{l};
    parts.insert(parts.end(), p.parts().begin(), p.parts().end());
    const BigInt d = dimension(Partition(std::move(parts)));
    r.exact += d * d;
  }
  return r;
}

Real box_dim_lower_bound(const Partition& lambda, int s, int t) {
  if (lambda.length() > s || lambda.first() > t)
    throw std::invalid_argument(lambda.to_string() + " does not fit a " +
                                std::to_string(s) + "x" + std::to_string(t) +
                                " box");
  const Real n = lambda.n();
  const Real e = boost::math::constants::e<Real>();
  return pow(n / (e * Real(s + t - 1)), n);
}

Partition near_square_partition(int n) {
  if (n < 1) throw std::invalid_argument("near_square_partition: n < 1");
  int k = static_cast<int>(std::sqrt(static_cast<double>(n)));
  while (k * k < n) ++k;
  while (k > 1 && (k - 1) * (k - 1) >= n) --k;
  std::vector<int> parts(static_cast<std::size_t>(n / k), k);
  if (n % k) parts.push_back(n % k);
  return Partition(std::move(parts));
}

Partition staircase_partition(int m) {
  if (m < 1) throw std::invalid_argument("staircase_partition: m < 1");
  std::vector<int> parts;
  for (int i = m; i >= 1; --i) parts.push_back(i);
  return Partition(std::move(parts));
}

bool dominates(const Partition& hi, const Partition& lo) {
  if (hi.n() != lo.n())
    throw std::invalid_argument("dominates: partitions of different sizes");
  int a = 0, b = 0;
  const int rows = std::max(hi.length(), lo.length());
  for (int i = 1; i <= rows; ++i) {
    a += hi.row(i);
    b += lo.row(i);
    if (a < b) return false;
  }
  return true;
}

}  // namespace symwalk
