#pragma once

// Cross-module agreement checks between the spectral formulas and the
// brute-force oracle. Shared by the command-line verifier and the test
// suites.

#include "symwalk/numeric.hpp"

#include <string>
#include <vector>

namespace symwalk {

struct OracleAgreement {
  std::string walk;
  int n = 0;
  bool exact_mode = false;       ///< discrete laws computed in rationals
  bool character_spectrum = false;  ///< compared with characters, else with a dense eigen-solve
  Real max_discrete_error = 0;   ///< over t = 0..t_max
  Real max_continuous_error = 0; ///< over the continuous times
  Real min_tv_margin = 0;        ///< min of d₂ - 2 TV over every law examined
};

/// Walk names: "rt", "ttr", "ri", "class:<ct>", "lazy:<ct>:<eps>".
/// Class-function walks are compared with their character spectrum, and
/// ttr/ri with the dense operator eigenvalues. n <= 6.
OracleAgreement oracle_agreement(const std::string& walk, int n, unsigned t_max,
                                 const std::vector<Real>& continuous_times);

}  // namespace symwalk
