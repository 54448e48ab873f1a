#include "symwalk/characters.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>

namespace symwalk {

CycleType::CycleType(std::vector<int> cycles) : cycles_(std::move(cycles)) {
  for (int c : cycles_) {
    if (c < 1) throw std::invalid_argument("cycle lengths must be positive");
    n_ += c;
  }
  std::sort(cycles_.begin(), cycles_.end(), std::greater<>());
}

CycleType CycleType::identity(int n) {
  return CycleType(std::vector<int>(static_cast<std::size_t>(n), 1));
}

CycleType CycleType::cycle(int k, int n) {
  if (k < 1 || k > n) throw std::invalid_argument("cycle length out of range");
  std::vector<int> c{k};
  c.resize(static_cast<std::size_t>(n - k + 1), 1);
  return CycleType(std::move(c));
}

CycleType CycleType::parse(const std::string& text, int n) {
  std::string body;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') body += ch;
  std::vector<int> cycles;
  std::stringstream ss(body);
  std::string item;
  int total = 0;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad cycle type: " + text);
    }
    if (used != item.size() || v < 1)
      throw std::invalid_argument("bad cycle type: " + text);
    cycles.push_back(v);
    total += v;
  }
  if (cycles.empty()) throw std::invalid_argument("empty cycle type");
  if (total > n)
    throw std::invalid_argument("cycle type " + text + " exceeds degree " +
                                std::to_string(n));
  cycles.resize(cycles.size() + static_cast<std::size_t>(n - total), 1);
  return CycleType(std::move(cycles));
}

int CycleType::support() const {
  int s = 0;
  for (int c : cycles_)
    if (c > 1) s += c;
  return s;
}

bool CycleType::is_even() const {
  int t = 0;
  for (int c : cycles_) t += c - 1;
  return t % 2 == 0;
}

BigInt CycleType::class_size() const {
  // n! / z with z = Π k^{m_k} m_k!
  std::map<int, unsigned> mult;
  for (int c : cycles_) ++mult[c];
  BigInt z = 1;
  for (auto [k, m] : mult) {
    for (unsigned i = 0; i < m; ++i) z *= k;
    z *= factorial(m);
  }
  return factorial(static_cast<unsigned>(n_)) / z;
}

std::string CycleType::to_string() const {
  return Partition(cycles_).to_string();
}

std::string CycleType::label() const {
  std::string out;
  for (int c : cycles_) {
    if (c == 1) break;
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out.empty() ? "1" : out;
}

std::vector<SkewHookRemoval> remove_skew_hooks(const Partition& lambda, int k) {
  std::vector<SkewHookRemoval> out;
  if (k < 1) throw std::invalid_argument("skew hook size must be positive");
  const Partition conj = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i) {
    for (int j = 1; j <= lambda.row(i); ++j) {
      const int leg = conj.row(j) - i;
      const int arm = lambda.row(i) - j;
      if (arm + leg + 1 != k) continue;
      // The rim hook attached to cell (i,j): rows i..i+leg shift up by one
      // row, and the last one is cut back to column j-1.
      std::vector<int> rows = lambda.parts();
      for (int r = i; r < i + leg; ++r)
        rows[static_cast<std::size_t>(r - 1)] = lambda.row(r + 1) - 1;
      rows[static_cast<std::size_t>(i + leg - 1)] = j - 1;
      while (!rows.empty() && rows.back() == 0) rows.pop_back();
      out.push_back({Partition(std::move(rows)), leg});
    }
  }
  return out;
}

// --- memo table -----------------------------------------------------------

std::size_t CharacterTable::KeyHash::operator()(const Key& k) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int v : k) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

CharacterTable::CharacterTable(std::size_t max_entries)
    : max_entries_(max_entries) {}

std::size_t CharacterTable::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

void CharacterTable::clear() {
  std::unique_lock lock(mutex_);
  memo_.clear();
  recency_.clear();
}

bool CharacterTable::lookup(const Key& key, BigInt& out) {
  if (max_entries_ == 0) {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it == memo_.end()) return false;
    out = it->second.value;
    return true;
  }
  std::unique_lock lock(mutex_);
  auto it = memo_.find(key);
  if (it == memo_.end()) return false;
  recency_.splice(recency_.begin(), recency_, it->second.position);
  out = it->second.value;
  return true;
}

void CharacterTable::store(const Key& key, const BigInt& value) {
  std::unique_lock lock(mutex_);
  if (memo_.contains(key)) return;
  if (max_entries_ == 0) {
    memo_.emplace(key, Entry{value, {}});
    return;
  }
  recency_.push_front(key);
  memo_.emplace(key, Entry{value, recency_.begin()});
  while (memo_.size() > max_entries_) {
    memo_.erase(recency_.back());
    recency_.pop_back();
  }
}

BigInt CharacterTable::evaluate(const Partition& lambda,
                                const std::vector<int>& cycles,
                                std::size_t from) {
  if (lambda.empty()) return 1;
  if (from == cycles.size() || cycles[from] == 1) return dimension(lambda);

  Key key = lambda.parts();
  key.push_back(0);
  key.insert(key.end(), cycles.begin() + static_cast<std::ptrdiff_t>(from),
             cycles.end());
  BigInt cached;
  if (lookup(key, cached)) return cached;

  BigInt sum = 0;
  for (const SkewHookRemoval& h : remove_skew_hooks(lambda, cycles[from])) {
    BigInt term = evaluate(h.remainder, cycles, from + 1);
    if (h.leg_length % 2) sum -= term;
    else sum += term;
  }
  store(key, sum);
  return sum;
}

BigInt CharacterTable::character(const Partition& lambda,
                                 const CycleType& alpha) {
  if (lambda.n() != alpha.n())
    throw std::invalid_argument("character: degree mismatch between " +
                                lambda.to_string() + " and " +
                                alpha.to_string());
  return evaluate(lambda, alpha.cycles(), 0);
}

CharacterTable& shared_character_table() {
  static CharacterTable table;
  return table;
}

BigInt character(const Partition& lambda, const CycleType& alpha) {
  return shared_character_table().character(lambda, alpha);
}

Rational char_ratio(const Partition& lambda, const CycleType& alpha) {
  if (lambda.empty()) throw std::invalid_argument("char_ratio of empty partition");
  return Rational(character(lambda, alpha), dimension(lambda));
}

BigInt m_moment(const Partition& lambda, int l) {
  if (l < 1) throw std::invalid_argument("m_moment: l < 1");
  BigInt m = 0;
  for (int j = 1; j <= lambda.length(); ++j) {
    const BigInt a = lambda.row(j) - j;
    m += pow(a, static_cast<unsigned>(l)) * pow(BigInt(a + 1), static_cast<unsigned>(l));
    m -= pow(BigInt(j), static_cast<unsigned>(l)) *
         pow(BigInt(j - 1), static_cast<unsigned>(l));
  }
  return m;
}

Rational r4_exact(const Partition& lambda) {
  const int n = lambda.n();
  if (n < 4) throw std::invalid_argument("r4_exact needs n >= 4");
  const BigInt num = m_moment(lambda, 2) - BigInt(2 * (2 * n - 3)) * m_moment(lambda, 1);
  return Rational(num, falling_factorial(static_cast<unsigned>(n), 4));
}

Rational char_ratio_bound(const Partition& lambda, RatioClass kind) {
  const int n = lambda.n();
  const int l1 = lambda.first();
  if (n < 2) throw std::invalid_argument("char_ratio_bound needs n >= 2");
  if (kind == RatioClass::four_cycle && n < 11)
    throw std::invalid_argument("four-cycle ratio bound needs n >= 11");
  if (2 * l1 >= n) {
    const BigInt num = kind == RatioClass::transposition
                           ? BigInt(2) * (n - l1) * (l1 + 1)
                           : BigInt(2) * l1 * (n - l1);
    return Rational(1) - Rational(num, BigInt(n) * (n - 1));
  }
  return Rational(BigInt(l1 - 1), BigInt(n - 1));
}

Real ratio_shape_constant(const Partition& lambda, const CycleType& alpha) {
  const int len = alpha.transposition_length();
  if (len == 0) throw std::invalid_argument("shape constant undefined at the identity");
  const Real r = abs(to_real(char_ratio(lambda, alpha)));
  const Real n = lambda.n();
  const Real scale = std::max(Real(1), Real(len) * len / n);
  return pow(r, Real(1) / len) * sqrt(n) / scale;
}

}  // namespace symwalk
