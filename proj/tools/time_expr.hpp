#pragma once

#include "symwalk/numeric.hpp"

#include <string>
#include <vector>

namespace symwalk::cli {

/// Evaluates expressions such as "nlogn-3n", "0.5 n (logn + 2)" or "2*n".
/// Tokens: numbers, n, logn, nlogn, + - * · / and parentheses; juxtaposition
/// multiplies. Throws std::invalid_argument on malformed input.
Real eval_time_expr(const std::string& text, int n);

/// Splits a comma list and evaluates each item.
std::vector<Real> eval_time_list(const std::string& text, int n);

}  // namespace symwalk::cli
