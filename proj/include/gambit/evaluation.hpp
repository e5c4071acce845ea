#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gambit/clustering.hpp"
#include "gambit/normalize.hpp"
#include "gambit/rules.hpp"

namespace gambit {

/// Pair-counting comparison of a predicted partition with ground truth.
/// Undefined ratios (zero denominators) are reported as 0.
struct EvalReport {
  std::uint64_t true_positives = 0;
  std::uint64_t false_positives = 0;
  std::uint64_t false_negatives = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  static EvalReport from_counts(std::uint64_t tp, std::uint64_t fp,
                                std::uint64_t fn);
};

/// Counts over all unordered alias pairs. Throws UniverseMismatch when the
/// partitions cover different ids.
EvalReport evaluate(const Partition& predicted, const Partition& truth);

struct SweepRow {
  Method method;
  // Empty for the Simple algorithm, which has neither.
  std::optional<SimilarityMeasure> measure;
  std::optional<double> threshold;
  EvalReport report;
  double wall_time_ms = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

struct SweepOptions {
  std::vector<Method> methods;
  std::vector<SimilarityMeasure> measures;
  std::vector<double> thresholds;
  std::size_t min_length = 3;
  unsigned threads = 0;
};

/// Runs disambiguate + evaluate for every (method, measure, threshold) in
/// option order; Simple contributes a single row at its position in the
/// method list. Thresholds are sorted and deduplicated first.
SweepResult sweep(std::span<const Alias> aliases, const Partition& truth,
                  const SweepOptions& options);

/// method,measure,threshold,tp,fp,fn,precision,recall,f1,wall_time_ms.
/// With `include_timing == false` the last column is written as 0 so that
/// repeated runs are byte-identical.
void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     bool include_timing = true);

/// Wide precision/recall table: one line per threshold, a precision and a
/// recall column per (method, measure). Simple rows repeat at every threshold.
void write_precision_recall_table(std::ostream& out, const SweepResult& result);

/// start, start + step, ... up to stop (inclusive within 1e-9). Values are
/// rounded to 9 decimals so 0.5:1:0.05 yields exactly 0.95 and 1.0.
std::vector<double> threshold_range(double start, double stop, double step);

/// Cohen's kappa for two raters' binary labels on the same items. Returns 1
/// when both raters agree everywhere (including the degenerate single-class
/// case). Throws UsageError on empty or differently sized inputs.
double cohen_kappa(std::span<const bool> labels_a, std::span<const bool> labels_b);

/// Pairs of alias ids, first < second.
using IdPair = std::pair<std::string, std::string>;

struct TriageResult {
  std::vector<IdPair> auto_match;
  std::vector<IdPair> auto_differ;
  std::vector<IdPair> undecided;
};

/// Ground-truth assistance. Pairs with identical non-empty name or email are
/// matched automatically, and that relation is closed transitively. Of the
/// rest, pairs whose normalized Levenshtein similarity is below `cutoff` for
/// both name and email are marked different; everything else is left for
/// manual review. All lists are sorted.
TriageResult triage(std::span<const Alias> aliases, double cutoff = 0.5);

}  // namespace gambit
