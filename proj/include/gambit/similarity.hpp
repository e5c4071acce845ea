#pragma once

#include <cstddef>
#include <string_view>

namespace gambit {

enum class SimilarityMeasure { NormalizedLevenshtein, JaroWinkler };

/// Short CLI/CSV names: "lev" and "jw".
std::string_view to_string(SimilarityMeasure measure);
SimilarityMeasure parse_measure(std::string_view name);

/// Plain Levenshtein edit distance (unit cost insert/delete/substitute).
std::size_t levenshtein_distance(std::string_view a, std::string_view b);

/// 1 - d(a, b) / max(|a|, |b|); two empty strings are identical (1.0).
double levenshtein_similarity(std::string_view a, std::string_view b);

/// Intermediate quantities of the Jaro similarity.
struct JaroBreakdown {
  std::size_t common = 0;        // matching characters within the window
  double transpositions = 0.0;   // half the out-of-order matches
  std::size_t prefix_length = 0; // common prefix, capped at 4
  double jaro = 0.0;
};

JaroBreakdown jaro_breakdown(std::string_view a, std::string_view b);

double jaro_similarity(std::string_view a, std::string_view b);

/// Jaro plus the prefix bonus 0.1 * l * (1 - jaro). No boost threshold is
/// applied. Two empty strings give 1.0.
double jaro_winkler_similarity(std::string_view a, std::string_view b);

double similarity(SimilarityMeasure measure, std::string_view a,
                  std::string_view b);

}  // namespace gambit
