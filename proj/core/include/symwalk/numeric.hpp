#pragma once

// Number types shared by every module, plus the small amount of numeric
// and threading plumbing the spectral sums need.

#include <boost/multiprecision/float128.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace symwalk {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
/// IEEE binary128 (113-bit significand) via libquadmath.
using Real = boost::multiprecision::float128;

/// Thrown when a request would exceed a module's memory/time guard
/// (e.g. brute-force enumeration of S_n for large n).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt factorial(unsigned n);
/// n!/(n-k)!, with k <= n.
BigInt falling_factorial(unsigned n, unsigned k);
BigInt binomial(unsigned n, unsigned k);

/// r^k computed on numerator and denominator separately.
Rational rational_pow(const Rational& r, unsigned k);

Real to_real(const BigInt& x);
Real to_real(const Rational& x);

/// Natural log of a positive big integer, accurate to working precision
/// even when x overflows every hardware float.
Real log_of(const BigInt& x);
Real log_factorial(unsigned n);

inline Real neg_infinity() { return -std::numeric_limits<Real>::infinity(); }

/// log(sum_i exp(logs[i])). Empty input (or all -inf) gives -inf.
/// The reduction order depends only on the input length.
Real log_sum_exp(std::span<const Real> logs);

/// Rational parsed from "3", "-2/7" or a decimal literal such as "0.125"
/// (decimals are converted exactly).
Rational parse_rational(const std::string& text);

// --- parallelism ----------------------------------------------------------

/// Worker count used by the parallel sweeps. Defaults to the value of the
/// SYMWALK_THREADS environment variable, else hardware_concurrency().
unsigned thread_count();
void set_thread_count(unsigned threads);

/// Runs body(i) for i in [0, count) on up to thread_count() workers.
/// Each index is visited exactly once; the first exception is rethrown.
template <class Body>
void parallel_for(std::size_t count, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(thread_count(), count == 0 ? 1 : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t i = w; i < count; i += workers) body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace symwalk
