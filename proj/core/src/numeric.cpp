#include "symwalk/numeric.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cctype>
#include <atomic>
#include <cstdlib>
#include <gmp.h>

namespace symwalk {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.backend().data(), n);
  return r;
}

BigInt falling_factorial(unsigned n, unsigned k) {
  if (k > n) throw std::invalid_argument("falling_factorial: k > n");
  BigInt r = 1;
  for (unsigned i = n - k + 1; i <= n; ++i) r *= i;
  return r;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt r;
  mpz_bin_uiui(r.backend().data(), n, k);
  return r;
}

Rational rational_pow(const Rational& r, unsigned k) {
  return Rational(pow(numerator(r), k), pow(denominator(r), k));
}

namespace {

// Top 128 bits of |x| as a binary128 value times 2^shift.
Real scaled_mantissa(const BigInt& x, long& shift) {
  const std::size_t bits = mpz_sizeinbase(x.backend().data(), 2);
  shift = bits > 128 ? static_cast<long>(bits - 128) : 0;
  BigInt top = shift > 0 ? BigInt(x >> shift) : x;
  const BigInt mask = (BigInt(1) << 64) - 1;
  const auto lo = static_cast<std::uint64_t>(BigInt(top & mask));
  const auto hi = static_cast<std::uint64_t>(BigInt(top >> 64));
  return Real(hi) * Real(18446744073709551616.0) + Real(lo);
}

}  // namespace

Real to_real(const BigInt& x) {
  if (x == 0) return Real(0);
  long shift = 0;
  Real m = scaled_mantissa(abs(x), shift);
  Real r = ldexp(m, static_cast<int>(shift));
  return x < 0 ? Real(-r) : r;
}

Real to_real(const Rational& x) {
  const BigInt num = numerator(x);
  const BigInt den = denominator(x);
  if (num == 0) return Real(0);
  long sn = 0, sd = 0;
  Real mn = scaled_mantissa(abs(num), sn);
  Real md = scaled_mantissa(den, sd);
  Real r = ldexp(mn / md, static_cast<int>(sn - sd));
  return num < 0 ? Real(-r) : r;
}

Real log_of(const BigInt& x) {
  if (x <= 0) throw std::domain_error("log_of: non-positive argument");
  long shift = 0;
  Real m = scaled_mantissa(x, shift);
  return log(m) + Real(shift) * boost::math::constants::ln_two<Real>();
}

Real log_factorial(unsigned n) {
  if (n < 2) return Real(0);
  return boost::math::lgamma(Real(n) + 1);
}

namespace {

// Pairwise sum of exp(logs[i] - shift).
Real pairwise_exp_sum(std::span<const Real> logs, const Real& shift) {
  if (logs.size() <= 8) {
    // Neumaier-compensated leaf.
    Real sum = 0, comp = 0;
    for (const Real& l : logs) {
      Real term = exp(l - shift);
      Real t = sum + term;
      if (abs(sum) >= abs(term))
        comp += (sum - t) + term;
      else
        comp += (term - t) + sum;
      sum = t;
    }
    return sum + comp;
  }
  const std::size_t half = logs.size() / 2;
  return pairwise_exp_sum(logs.first(half), shift) +
         pairwise_exp_sum(logs.subspan(half), shift);
}

}  // namespace

Real log_sum_exp(std::span<const Real> logs) {
  if (logs.empty()) return neg_infinity();
  Real top = *std::max_element(logs.begin(), logs.end());
  if (isinf(top)) return top;
  return top + log(pairwise_exp_sum(logs, top));
}

namespace {

// Decimal only: the string constructor of mpz_int would read "0125" as octal.
BigInt decimal_integer(std::string digits, const std::string& text) {
  bool negative = false;
  if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
    negative = digits[0] == '-';
    digits.erase(0, 1);
  }
  if (digits.empty()) throw std::invalid_argument("malformed rational literal: " + text);
  BigInt value = 0;
  for (const char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("malformed rational literal: " + text);
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const BigInt num = decimal_integer(text.substr(0, slash), text);
    const BigInt den = decimal_integer(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in " + text);
    return Rational(num, den);
  }
  std::string digits = text;
  BigInt scale = 1;
  if (auto dot = digits.find('.'); dot != std::string::npos) {
    const std::size_t frac = digits.size() - dot - 1;
    digits.erase(dot, 1);
    for (std::size_t i = 0; i < frac; ++i) scale *= 10;
  }
  return Rational(decimal_integer(digits, text), scale);
}

namespace {

unsigned initial_thread_count() {
  if (const char* env = std::getenv("SYMWALK_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> value{initial_thread_count()};
  return value;
}

}  // namespace

unsigned thread_count() { return thread_setting().load(); }

void set_thread_count(unsigned threads) {
  thread_setting().store(std::max(1u, threads));
}

}  // namespace symwalk
