#include "symwalk/bounds.hpp"

#include "symwalk/distances.hpp"
#include "symwalk/group_oracle.hpp"
#include "symwalk/spectra.hpp"

#include <boost/math/constants/constants.hpp>

#include <algorithm>

namespace symwalk {

namespace {

int floor_div(int a, int b) { return a / b; }
int ceil_div(int a, int b) { return (a + b - 1) / b; }

// log[(n!/(n-j)!)² / j!]
Real log_prefactor(int n, int j) {
  return 2 * (log_factorial(static_cast<unsigned>(n)) -
              log_factorial(static_cast<unsigned>(n - j))) -
         log_factorial(static_cast<unsigned>(j));
}

Real range_sum(const std::vector<Real>& v, int lo, int hi) {
  std::vector<Real> logs;
  for (int j = std::max(lo, 1); j <= hi; ++j) {
    const Real x = v[static_cast<std::size_t>(j)];
    logs.push_back(x > 0 ? Real(log(x)) : neg_infinity());
  }
  return exp(log_sum_exp(logs));
}

Real log_power_or_zero(const Real& base, const Real& exponent) {
  if (base <= 0) return neg_infinity();
  return exponent * log(base);
}

BoundReport report(std::string name, int n, Real computed, Real guaranteed) {
  BoundReport r;
  r.name = std::move(name);
  r.n = n;
  r.computed = computed;
  r.guaranteed = guaranteed;
  r.pass = computed <= guaranteed;
  return r;
}

}  // namespace

RtDiscreteTerms rt_discrete_terms(int n) {
  if (n < 14) throw std::invalid_argument("discrete transposition terms need n >= 14");
  RtDiscreteTerms out;
  out.n = n;
  out.a.assign(static_cast<std::size_t>(n + 1), Real(0));
  out.b.assign(static_cast<std::size_t>(n + 1), Real(0));
  const Real rn = n;
  const Real nlogn = rn * log(rn);
  for (int j = 1; j <= n; ++j) {
    const Real rj = j;
    const Real pre = log_prefactor(n, j);
    const Real abase = 1 - (2 * rj / rn) * (1 - (rj - 1) / rn);
    out.a[static_cast<std::size_t>(j)] = exp(pre + log_power_or_zero(abase, nlogn));
    out.b[static_cast<std::size_t>(j)] = exp(pre + log_power_or_zero(1 - rj / rn, nlogn));
  }
  out.phi0 = range_sum(out.a, 1, floor_div(n, 4));
  out.phi1 = range_sum(out.a, ceil_div(n, 4), floor_div(n, 2));
  out.phi2 = range_sum(out.b, ceil_div(n, 2), n);
  return out;
}

Real rt_discrete_phi2(int n) {
  if (n < 9) throw std::invalid_argument("phi2 estimate needs n >= 9");
  const Real rn = n;
  const Real nlogn = rn * log(rn);
  std::vector<Real> logs;
  for (int j = ceil_div(n, 2); j <= n; ++j)
    logs.push_back(log_prefactor(n, j) + log_power_or_zero(1 - Real(j) / rn, nlogn));
  return exp(log_sum_exp(logs));
}

RtContinuousTerms rt_continuous_terms(int n) {
  if (n < 10) throw std::invalid_argument("continuous transposition terms need n >= 10");
  RtContinuousTerms out;
  out.n = n;
  out.a.assign(static_cast<std::size_t>(n + 1), Real(0));
  out.b.assign(static_cast<std::size_t>(n + 1), Real(0));
  const Real rn = n;
  const Real logn = log(rn);
  for (int j = 1; j <= n; ++j) {
    const Real rj = j;
    const Real pre = log_prefactor(n, j);
    out.a[static_cast<std::size_t>(j)] = exp(pre - 2 * rj * logn * (1 - rj / rn) - 2 * rj);
    out.b[static_cast<std::size_t>(j)] = exp(pre - rj * logn - 2 * rj);
  }
  out.low = range_sum(out.a, 1, floor_div(n, 4));
  out.mid = range_sum(out.a, ceil_div(n, 4), floor_div(n, 2));
  out.gamma = range_sum(out.b, ceil_div(n, 2), n);
  return out;
}

Real ttr_bound_sum(int n, const Real& t) {
  if (n < 1) throw std::invalid_argument("ttr_bound_sum needs n >= 1");
  if (t < 0) throw std::invalid_argument("ttr_bound_sum needs t >= 0");
  std::vector<Real> logs;
  for (int j = 1; j <= n - 1; ++j) {
    const Real base = 1 - Real(j) / n;
    logs.push_back(log_prefactor(n, j) + (t == 0 ? Real(0) : Real(2 * t * log(base))));
  }
  return exp(log_sum_exp(logs));
}

std::vector<BoundReport> lemma_reports(int n) {
  std::vector<BoundReport> out;
  const Real rn = n;
  const Real nlogn = rn * log(rn);
  if (n >= 14) {
    const auto d = rt_discrete_terms(n);
    out.push_back(report("phi0", n, d.phi0, Real(2)));
    out.push_back(report("phi1", n, d.phi1, exp(2 - nlogn / 6)));
  }
  if (n >= 9)
    out.push_back(report("phi2", n, rt_discrete_phi2(n), exp(1 - 3 * nlogn / 1000)));
  if (n >= 10) {
    const auto c = rt_continuous_terms(n);
    const Real e = boost::math::constants::e<Real>();
    out.push_back(report("cont_low", n, c.low, Real(2) / 3));
    out.push_back(report("cont_mid", n, c.mid, Real(1) / 4));
    out.push_back(report("cont_gamma", n, c.gamma, 2 * pow(2 / e, 3 * rn / 2)));
  }
  return out;
}

std::string to_string(TheoremWalk w) {
  switch (w) {
    case TheoremWalk::rt_discrete: return "rt-discrete";
    case TheoremWalk::rt_continuous: return "rt-continuous";
    case TheoremWalk::ttr: return "ttr";
    case TheoremWalk::four_cycle: return "four-cycle";
    case TheoremWalk::random_insertion: return "random-insertion";
  }
  return "?";
}

TheoremWalk parse_theorem_walk(const std::string& text) {
  std::string name = text;
  std::replace(name.begin(), name.end(), '_', '-');
  for (auto w : {TheoremWalk::rt_discrete, TheoremWalk::rt_continuous, TheoremWalk::ttr,
                 TheoremWalk::four_cycle, TheoremWalk::random_insertion})
    if (to_string(w) == name) return w;
  throw std::invalid_argument("unknown theorem walk: " + text);
}

BoundReport theorem_bound(TheoremWalk walk, int n, const Real& c) {
  const Real rn = n;
  const Real logn = log(rn);
  BoundReport r;
  r.name = to_string(walk);
  r.n = n;
  r.c = c;
  auto need = [&](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(r.name + ": " + what);
  };
  switch (walk) {
    case TheoremWalk::rt_discrete: {
      need(n >= 15 && c >= 0, "needs n >= 15 and c >= 0");
      const Real t = ceil(rn / 2 * (logn + c));
      const auto s = spectrum(random_transposition_measure(n), Group::Sn);
      r.t = t;
      r.computed = l2_discrete(s, static_cast<std::uint64_t>(t));
      r.guaranteed = 2 * exp(-c);
      const auto terms = rt_discrete_terms(n);
      r.terms = {{"phi0", terms.phi0}, {"phi1", terms.phi1}, {"phi2", terms.phi2}};
      break;
    }
    case TheoremWalk::rt_continuous:
    case TheoremWalk::random_insertion: {
      need(n >= 10 && c >= 2, "needs n >= 10 and c >= 2");
      // Random insertion at time 2n(log n + c) is dominated by the
      // continuous transposition walk at a quarter of that time.
      const Real t_rt = rn / 2 * (logn + c);
      r.t = walk == TheoremWalk::random_insertion ? Real(4 * t_rt) : t_rt;
      const auto s = spectrum(random_transposition_measure(n), Group::Sn);
      r.computed = l2_continuous(s, t_rt);
      r.guaranteed = exp(-(c - 2));
      const auto terms = rt_continuous_terms(n);
      r.terms = {{"cont_low", terms.low}, {"cont_mid", terms.mid}, {"cont_gamma", terms.gamma}};
      if (walk == TheoremWalk::random_insertion) r.terms.emplace_back("rt_time", t_rt);
      break;
    }
    case TheoremWalk::ttr: {
      need(n >= 2 && c >= 0, "needs n >= 2 and c >= 0");
      const Real t = ceil(rn * (logn + c));
      r.t = t;
      const Real sum = ttr_bound_sum(n, t);
      r.computed = sqrt(sum);
      r.guaranteed = sqrt(Real(2)) * exp(-c);
      r.terms = {{"bound_sum", sum}, {"bound_sum_limit", 2 * exp(-2 * c)}};
      if (n <= kMaxRealOracleDegree) {
        const SymmetricGroup g(n);
        const auto law = convolution_power(ttr_element_measure<Real>(g), g,
                                           static_cast<unsigned>(t));
        const Real exact = chi_square_of(law);
        r.terms.emplace_back("oracle_d2", exact);
        r.computed = std::max(r.computed, exact);
      }
      break;
    }
    case TheoremWalk::four_cycle: {
      need(n >= 11 && c >= 2, "needs n >= 11 and c >= 2");
      const Real t = rn / 2 * (logn + c);
      r.t = t;
      const auto s = spectrum(uniform_class_measure(CycleType::cycle(4, n)), Group::Sn);
      r.computed = l2_continuous(s, t);
      r.guaranteed = exp(-(c - 2));
      break;
    }
  }
  r.pass = r.computed <= r.guaranteed;
  return r;
}

MatchingTail matching_tail(int n, int j) {
  if (j < 1 || j > n) throw std::invalid_argument("matching_tail needs 1 <= j <= n");
  MatchingTail out;
  for (int m = j; m <= n; ++m) {
    Rational inner = 0;
    for (int v = 0; v <= n - m; ++v) {
      const Rational term(BigInt(1), factorial(static_cast<unsigned>(v)));
      if (v % 2) inner -= term;
      else inner += term;
    }
    out.value += inner / Rational(factorial(static_cast<unsigned>(m)));
  }
  if (j >= 2)
    out.bound = exp(Real(-1)) / to_real(factorial(static_cast<unsigned>(j - 1)));
  return out;
}

std::pair<Real, Real> stirling_envelope(int n) {
  if (n < 1) throw std::invalid_argument("stirling_envelope needs n >= 1");
  const Real rn = n;
  const Real pi = boost::math::constants::pi<Real>();
  const Real lower = sqrt(2 * pi * rn) * exp(rn * (log(rn) - 1));
  return {lower, lower * exp(1 / (12 * rn))};
}

bool calculus_claim(const Real& w, const Real& x) {
  if (x >= 1) return false;
  return 2 * log1p(-x) >= -w * x;
}

}  // namespace symwalk
