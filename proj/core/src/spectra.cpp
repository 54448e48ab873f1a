#include "symwalk/spectra.hpp"

#include <optional>

namespace symwalk {

bool ClassMeasure::even() const {
  for (const auto& [cls, w] : atoms)
    if (w != 0 && !cls.is_even()) return false;
  return true;
}

ClassMeasure random_transposition_measure(int n) {
  if (n < 2) throw std::invalid_argument("random transposition needs n >= 2");
  ClassMeasure q{n, {}, "rt"};
  q.atoms.emplace_back(CycleType::identity(n), Rational(1, n));
  q.atoms.emplace_back(CycleType::cycle(2, n), Rational(n - 1, n));
  return q;
}

ClassMeasure uniform_class_measure(const CycleType& cls) {
  if (cls.is_identity())
    throw std::invalid_argument("uniform class measure on the identity class");
  return ClassMeasure{cls.n(), {{cls, Rational(1)}}, "class:" + cls.label()};
}

ClassMeasure lazy_class_measure(const CycleType& cls, const Rational& eps) {
  if (eps <= 0 || eps >= 1)
    throw std::invalid_argument("laziness must lie strictly between 0 and 1");
  ClassMeasure q = uniform_class_measure(cls);
  q.atoms.front().second = 1 - eps;
  q.atoms.emplace(q.atoms.begin(), CycleType::identity(cls.n()), eps);
  q.name = "lazy:" + cls.label() + ":" + eps.str();
  return q;
}

ClassMeasure class_measure_from_name(const std::string& walk, int n) {
  if (walk == "rt") return random_transposition_measure(n);
  if (walk.rfind("class:", 0) == 0)
    return uniform_class_measure(CycleType::parse(walk.substr(6), n));
  if (walk.rfind("lazy:", 0) == 0) {
    const std::string rest = walk.substr(5);
    const auto colon = rest.rfind(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("lazy walk needs the form lazy:<cycle type>:<eps>");
    return lazy_class_measure(CycleType::parse(rest.substr(0, colon), n),
                              parse_rational(rest.substr(colon + 1)));
  }
  throw std::invalid_argument("not a class-function walk: " + walk);
}

Rational walk_eigenvalue(const ClassMeasure& q, const Partition& lambda) {
  if (lambda.n() != q.n)
    throw std::invalid_argument("walk_eigenvalue: degree mismatch");
  Rational beta = 0;
  for (const auto& [cls, w] : q.atoms)
    beta += cls.is_identity() ? w : w * char_ratio(lambda, cls);
  return beta;
}

std::string to_string(Group g) { return g == Group::Sn ? "sn" : "an"; }

BigInt Spectrum::total_multiplicity() const {
  BigInt s = 0;
  for (const auto& e : entries) s += e.multiplicity;
  return s;
}

namespace {

void guard_degree(int n) {
  if (n < 1) throw std::invalid_argument("spectrum needs n >= 1");
  if (n > kMaxSpectrumDegree)
    throw ResourceLimitError("spectra are limited to n <= " +
                             std::to_string(kMaxSpectrumDegree));
}

// Shared A_n bookkeeping. `eigen` maps a partition to its eigenvalue on
// the (restricted) walk; conjugate partitions must share that value.
template <class Eigen>
Spectrum an_spectrum(int n, Eigen&& eigen) {
  const auto parts = enumerate_partitions(n);
  std::vector<std::optional<SpectrumEntry>> slots(parts.size());
  const Partition trivial({n});
  const Partition sign = conjugate(trivial);
  parallel_for(parts.size(), [&](std::size_t i) {
    const Partition& lam = parts[i];
    if (lam == trivial) {
      slots[i] = SpectrumEntry{Rational(1), BigInt(1), lam, true};
      return;
    }
    if (lam == sign) return;
    const Partition conj = conjugate(lam);
    if (conj > lam) return;  // merged into its conjugate
    const BigInt d = dimension(lam);
    // Self-conjugate: d² / 2. Conjugate pair: 2 · d² / 2.
    const BigInt mult = conj == lam ? BigInt(d * d / 2) : BigInt(d * d);
    slots[i] = SpectrumEntry{eigen(lam), mult, lam, false};
  });
  Spectrum s{n, Group::An, {}};
  for (auto& slot : slots)
    if (slot) s.entries.push_back(std::move(*slot));
  return s;
}

}  // namespace

Spectrum spectrum(const ClassMeasure& q, Group group) {
  guard_degree(q.n);
  if (group == Group::An) {
    if (!q.even())
      throw std::invalid_argument(
          "A_n spectrum requested for a measure with odd classes");
    return an_spectrum(q.n, [&](const Partition& lam) {
      return walk_eigenvalue(q, lam);
    });
  }
  const auto parts = enumerate_partitions(q.n);
  Spectrum s{q.n, Group::Sn, std::vector<SpectrumEntry>(parts.size())};
  parallel_for(parts.size(), [&](std::size_t i) {
    const BigInt d = dimension(parts[i]);
    s.entries[i] = SpectrumEntry{walk_eigenvalue(q, parts[i]), d * d, parts[i],
                                 i == 0};
  });
  return s;
}

Spectrum squared_walk_spectrum_on_an(const ClassMeasure& q) {
  guard_degree(q.n);
  return an_spectrum(q.n, [&](const Partition& lam) {
    const Rational b = walk_eigenvalue(q, lam);
    return Rational(b * b);
  });
}

TransposeTopData transpose_top_sigma(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("transpose_top_sigma of empty partition");
  TransposeTopData out;
  const int n = lambda.n();
  for (int i = 1; i <= lambda.length(); ++i) {
    out.sigma.push_back(lambda.row(i) - i);
    out.alpha.emplace_back(lambda.row(i) - i + 1, n);
  }
  out.alpha1 = Rational(lambda.first(), n);
  return out;
}

Spectrum transpose_top_bound_spectrum(int n) {
  guard_degree(n);
  const auto parts = enumerate_partitions(n);
  Spectrum s{n, Group::Sn, std::vector<SpectrumEntry>(parts.size())};
  parallel_for(parts.size(), [&](std::size_t i) {
    const BigInt d = dimension(parts[i]);
    s.entries[i] =
        SpectrumEntry{Rational(parts[i].first(), n), d * d, parts[i], i == 0};
  });
  return s;
}

}  // namespace symwalk
