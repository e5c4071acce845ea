#include "gambit/similarity.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "gambit/error.hpp"

namespace gambit {

std::string_view to_string(SimilarityMeasure measure) {
  switch (measure) {
    case SimilarityMeasure::NormalizedLevenshtein:
      return "lev";
    case SimilarityMeasure::JaroWinkler:
      return "jw";
  }
  return "?";
}

SimilarityMeasure parse_measure(std::string_view name) {
  if (name == "lev" || name == "levenshtein") {
    return SimilarityMeasure::NormalizedLevenshtein;
  }
  if (name == "jw" || name == "jaro-winkler") {
    return SimilarityMeasure::JaroWinkler;
  }
  throw UsageError("unknown similarity measure '" + std::string(name) + "'");
}

std::size_t levenshtein_distance(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  // Single row over the shorter string; reused across calls on one thread.
  thread_local std::vector<std::size_t> row;
  row.resize(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;

  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t above = row[j];
      const std::size_t cost = a[i - 1] == b[j - 1] ? 0 : 1;
      row[j] = std::min({above + 1, row[j - 1] + 1, diagonal + cost});
      diagonal = above;
    }
  }
  return row[b.size()];
}

double levenshtein_similarity(std::string_view a, std::string_view b) {
  const std::size_t longest = std::max(a.size(), b.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein_distance(a, b)) /
                   static_cast<double>(longest);
}

JaroBreakdown jaro_breakdown(std::string_view a, std::string_view b) {
  JaroBreakdown out;
  if (a.empty() || b.empty()) return out;

  const std::size_t longest = std::max(a.size(), b.size());
  const std::size_t window = longest / 2 >= 1 ? longest / 2 - 1 : 0;

  thread_local std::vector<char> a_matched, b_matched;
  a_matched.assign(a.size(), 0);
  b_matched.assign(b.size(), 0);

  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t lo = i >= window ? i - window : 0;
    const std::size_t hi = std::min(b.size(), i + window + 1);
    for (std::size_t j = lo; j < hi; ++j) {
      if (!b_matched[j] && a[i] == b[j]) {
        a_matched[i] = b_matched[j] = 1;
        ++out.common;
        break;
      }
    }
  }
  if (out.common == 0) return out;

  std::size_t out_of_order = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a_matched[i]) continue;
    while (!b_matched[k]) ++k;
    if (a[i] != b[k]) ++out_of_order;
    ++k;
  }
  out.transpositions = static_cast<double>(out_of_order) / 2.0;

  const auto c = static_cast<double>(out.common);
  out.jaro = (c / static_cast<double>(a.size()) +
              c / static_cast<double>(b.size()) + (c - out.transpositions) / c) /
             3.0;

  const std::size_t max_prefix = std::min<std::size_t>({4, a.size(), b.size()});
  while (out.prefix_length < max_prefix &&
         a[out.prefix_length] == b[out.prefix_length]) {
    ++out.prefix_length;
  }
  return out;
}

double jaro_similarity(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  return jaro_breakdown(a, b).jaro;
}

double jaro_winkler_similarity(std::string_view a, std::string_view b) {
  if (a.empty() && b.empty()) return 1.0;
  const JaroBreakdown jb = jaro_breakdown(a, b);
  return jb.jaro + 0.1 * static_cast<double>(jb.prefix_length) * (1.0 - jb.jaro);
}

double similarity(SimilarityMeasure measure, std::string_view a,
                  std::string_view b) {
  switch (measure) {
    case SimilarityMeasure::NormalizedLevenshtein:
      return levenshtein_similarity(a, b);
    case SimilarityMeasure::JaroWinkler:
      return jaro_winkler_similarity(a, b);
  }
  return 0.0;
}

}  // namespace gambit
