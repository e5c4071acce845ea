#pragma once

#include <cstddef>

#include "gambit/normalize.hpp"
#include "gambit/rules.hpp"

namespace gambit {

/// Exact match on name or on email base. No hyper-parameters apart from the
/// shared minimum string length.
bool simple_match(const Alias& i, const Alias& j, std::size_t min_length = 3);

/// Matches if any single condition holds:
///   sim(N_i, N_j) >= t
///   min(sim(FN_i, FN_j), sim(LN_i, LN_j)) >= t
///   FN_x and LN_x both inside EB_y
///   FN_x[0] + LN_x inside EB_y
///   FN_x + LN_x[0] inside EB_y
///   sim(EB_i, EB_j) >= t
/// with (x, y) ranging over both directions. A comparison involving a string
/// shorter than cfg.min_length never holds.
bool bird_match(const Alias& i, const Alias& j, const MatcherConfig& cfg);

}  // namespace gambit
