#pragma once

#include "symwalk/characters.hpp"
#include "symwalk/numeric.hpp"
#include "symwalk/partitions.hpp"

#include <string>
#include <utility>
#include <vector>

namespace symwalk {

/// Largest degree for which full spectra are built.
inline constexpr int kMaxSpectrumDegree = 50;

/// A probability measure on S_n constant on conjugacy classes.
struct ClassMeasure {
  int n = 0;
  std::vector<std::pair<CycleType, Rational>> atoms;
  std::string name;

  /// True when every atom is an even class (the walk stays in A_n).
  bool even() const;
};

ClassMeasure random_transposition_measure(int n);
/// Throws std::invalid_argument for the identity class.
ClassMeasure uniform_class_measure(const CycleType& cls);
/// ε at the identity, 1-ε on the class; ε in (0,1).
ClassMeasure lazy_class_measure(const CycleType& cls, const Rational& eps);

/// "rt", "class:<cycle type>" or "lazy:<cycle type>:<eps>", e.g.
/// "class:4" or "lazy:3:1/2". Throws std::invalid_argument otherwise.
ClassMeasure class_measure_from_name(const std::string& walk, int n);

/// Σ_j q(C_j) χ_λ(c_j)/d_λ.
Rational walk_eigenvalue(const ClassMeasure& q, const Partition& lambda);

enum class Group { Sn, An };
std::string to_string(Group g);

struct SpectrumEntry {
  Rational beta;
  BigInt multiplicity;
  Partition lambda;
  bool trivial = false;
};

struct Spectrum {
  int n = 0;
  Group group = Group::Sn;
  std::vector<SpectrumEntry> entries;

  BigInt total_multiplicity() const;
};

/// Full spectrum of the convolution operator. On A_n the trivial block
/// keeps multiplicity 1, the sign block is dropped, and each remaining
/// block contributes d_λ²/2 (conjugate pairs are merged into one entry).
/// A_n requires an even measure. Throws ResourceLimitError past
/// kMaxSpectrumDegree.
Spectrum spectrum(const ClassMeasure& q, Group group);

/// The A_n spectrum of q*q for an odd-class measure q: eigenvalues β²,
/// bookkept as in spectrum(..., Group::An).
Spectrum squared_walk_spectrum_on_an(const ClassMeasure& q);

struct TransposeTopData {
  std::vector<int> sigma;        ///< σ_i = λ_i - i
  std::vector<Rational> alpha;   ///< (σ_i + 1)/n
  Rational alpha1;               ///< λ_1/n
};
TransposeTopData transpose_top_sigma(const Partition& lambda);

/// Entries (λ_1/n, d_λ²): the upper-bound spectrum for transpose-top.
Spectrum transpose_top_bound_spectrum(int n);

}  // namespace symwalk
