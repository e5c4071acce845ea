#pragma once

#include <array>
#include <cstddef>

#include "gambit/normalize.hpp"
#include "gambit/similarity.hpp"

namespace gambit {

struct MatcherConfig {
  double threshold = 0.95;
  SimilarityMeasure measure = SimilarityMeasure::NormalizedLevenshtein;
  // Strings shorter than this never count as similar.
  std::size_t min_length = 3;

  /// Throws UsageError unless 0 <= threshold <= 1 and min_length >= 1.
  void validate() const;
};

inline constexpr std::size_t kRuleCount = 10;

/// Per-rule scores for one alias pair; rule k lives at index k - 1.
///
/// Rules 1, 3-5 and 10 are similarities in [0, 1]; rules 2, 6 and 7 are
/// booleans in {0, 1}; rules 8 and 9 are booleans weighted by two, {0, 2}.
struct SimilarityVector {
  std::array<double, kRuleCount> scores{};

  double rule(std::size_t k) const { return scores[k - 1]; }
  /// Mean of the two largest scores.
  double top_two_average() const;

  bool operator==(const SimilarityVector&) const = default;
};

/// Evaluates all ten rules for aliases i and j.
///
///  1. sim(N_i, N_j)
///  2. N_i == N_j
///  3. min(sim(FN_i, FN_j), max(sim(LN_i, LN_j), sim(LN_i, PN_j), sim(PN_i, LN_j)))
///  4. min(sim(FN_i, LN_j), max(sim(PN_i, FN_j), sim(LN_i, PN_j), sim(LN_i, FN_j)))
///  5. min(sim(LN_i, FN_j), max(sim(PN_i, LN_j), sim(FN_i, PN_j), sim(FN_i, LN_j)))
///  6. FN_x[0] + LN_x is a substring of EB_y
///  7. FN_x + LN_x[0] is a substring of EB_y
///  8. 2 x (FN_x and LN_x are both substrings of EB_y)
///  9. 2 x (E_i == E_j)
/// 10. sim(EB_i, EB_j)
///
/// Rules 6-8 fire if they hold for either (x, y) = (i, j) or (j, i). Any
/// comparison touching a string shorter than `cfg.min_length` counts as a
/// mismatch (similarity 0, predicate false); for rules 6-8 that covers the
/// constructed needle(s) and the email base.
SimilarityVector score_pair(const Alias& i, const Alias& j,
                            const MatcherConfig& cfg);

/// True iff the average of the two largest rule scores is >= threshold.
bool is_match(const SimilarityVector& v, const MatcherConfig& cfg);

bool gambit_match(const Alias& i, const Alias& j, const MatcherConfig& cfg);

}  // namespace gambit
