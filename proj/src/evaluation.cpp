#include "gambit/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <map>
#include <unordered_map>

#include "gambit/error.hpp"
#include "gambit/similarity.hpp"

namespace gambit {

namespace {

std::uint64_t pairs_within(std::uint64_t n) { return n * (n - (n > 0)) / 2; }

}  // namespace

EvalReport EvalReport::from_counts(std::uint64_t tp, std::uint64_t fp,
                                   std::uint64_t fn) {
  EvalReport r;
  r.true_positives = tp;
  r.false_positives = fp;
  r.false_negatives = fn;
  r.precision = tp + fp == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fp);
  r.recall = tp + fn == 0 ? 0.0 : static_cast<double>(tp) / static_cast<double>(tp + fn);
  r.f1 = r.precision + r.recall == 0.0
             ? 0.0
             : 2.0 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

EvalReport evaluate(const Partition& predicted, const Partition& truth) {
  if (!predicted.same_universe(truth)) {
    throw UniverseMismatch(
        "predicted and ground-truth partitions cover different alias ids");
  }
  // Contingency table of (predicted author, true author) cluster sizes.
  std::map<std::string_view, std::uint64_t> pred_sizes, truth_sizes;
  std::map<std::pair<std::string_view, std::string_view>, std::uint64_t> joint;
  auto p = predicted.assignment().begin();
  for (const auto& [id, true_author] : truth.assignment()) {
    const std::string& pred_author = p->second;
    ++pred_sizes[pred_author];
    ++truth_sizes[true_author];
    ++joint[{pred_author, true_author}];
    ++p;
  }
  std::uint64_t both = 0, pred_pairs = 0, truth_pairs = 0;
  for (const auto& [key, n] : joint) both += pairs_within(n);
  for (const auto& [key, n] : pred_sizes) pred_pairs += pairs_within(n);
  for (const auto& [key, n] : truth_sizes) truth_pairs += pairs_within(n);
  return EvalReport::from_counts(both, pred_pairs - both, truth_pairs - both);
}

std::vector<double> threshold_range(double start, double stop, double step) {
  if (!(step > 0.0)) throw UsageError("threshold step must be positive");
  if (stop < start) throw UsageError("threshold range stop is below start");
  std::vector<double> out;
  const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) {
    const double t = start + static_cast<double>(k) * step;
    out.push_back(std::round(t * 1e9) / 1e9);
  }
  return out;
}

SweepResult sweep(std::span<const Alias> aliases, const Partition& truth,
                  const SweepOptions& options) {
  std::vector<double> thresholds = options.thresholds;
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  SweepResult result;
  if (thresholds.empty()) return result;

  using Clock = std::chrono::steady_clock;
  auto run = [&](Method method, std::optional<SimilarityMeasure> measure,
                 std::optional<double> threshold) {
    MatcherConfig cfg;
    cfg.min_length = options.min_length;
    if (measure) cfg.measure = *measure;
    if (threshold) cfg.threshold = *threshold;
    const auto start = Clock::now();
    const Partition predicted = disambiguate(aliases, method, cfg, options.threads);
    const auto elapsed = Clock::now() - start;
    SweepRow row{method, measure, threshold, evaluate(predicted, truth),
                 std::chrono::duration<double, std::milli>(elapsed).count()};
    result.rows.push_back(row);
  };

  for (Method method : options.methods) {
    if (method == Method::Simple) {
      run(method, std::nullopt, std::nullopt);
      continue;
    }
    for (SimilarityMeasure measure : options.measures) {
      for (double t : thresholds) run(method, measure, t);
    }
  }
  return result;
}

void write_sweep_csv(std::ostream& out, const SweepResult& result,
                     bool include_timing) {
  out << "method,measure,threshold,tp,fp,fn,precision,recall,f1,wall_time_ms\n";
  const auto flags = out.flags();
  const auto precision = out.precision();
  for (const auto& row : result.rows) {
    out << to_string(row.method) << ',';
    if (row.measure) out << to_string(*row.measure);
    out << ',';
    if (row.threshold) out << std::fixed << std::setprecision(4) << *row.threshold;
    out << ',' << row.report.true_positives << ',' << row.report.false_positives
        << ',' << row.report.false_negatives << ',' << std::fixed
        << std::setprecision(6) << row.report.precision << ',' << row.report.recall
        << ',' << row.report.f1 << ',' << std::setprecision(3)
        << (include_timing ? row.wall_time_ms : 0.0) << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void write_precision_recall_table(std::ostream& out, const SweepResult& result) {
  // Column order follows first appearance in the sweep.
  std::vector<std::string> series;
  std::map<std::string, std::map<double, const EvalReport*>> by_series;
  std::map<std::string, const EvalReport*> constant;
  std::vector<double> thresholds;
  for (const auto& row : result.rows) {
    std::string name(to_string(row.method));
    if (row.measure) name += "_" + std::string(to_string(*row.measure));
    if (std::find(series.begin(), series.end(), name) == series.end()) {
      series.push_back(name);
    }
    if (row.threshold) {
      by_series[name][*row.threshold] = &row.report;
      thresholds.push_back(*row.threshold);
    } else {
      constant[name] = &row.report;
    }
  }
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()),
                   thresholds.end());

  const auto flags = out.flags();
  const auto precision = out.precision();
  out << "threshold";
  for (const auto& s : series) out << ',' << s << "_precision," << s << "_recall";
  out << '\n';
  for (double t : thresholds) {
    out << std::fixed << std::setprecision(4) << t << std::setprecision(6);
    for (const auto& s : series) {
      const EvalReport* r = nullptr;
      if (auto c = constant.find(s); c != constant.end()) {
        r = c->second;
      } else if (auto it = by_series[s].find(t); it != by_series[s].end()) {
        r = it->second;
      }
      if (r) {
        out << ',' << r->precision << ',' << r->recall;
      } else {
        out << ",,";
      }
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

double cohen_kappa(std::span<const bool> labels_a, std::span<const bool> labels_b) {
  if (labels_a.size() != labels_b.size()) {
    throw UsageError("kappa label lists differ in length");
  }
  if (labels_a.empty()) throw UsageError("kappa needs at least one label");

  std::uint64_t agree = 0, a_true = 0, b_true = 0;
  for (std::size_t k = 0; k < labels_a.size(); ++k) {
    agree += labels_a[k] == labels_b[k];
    a_true += labels_a[k];
    b_true += labels_b[k];
  }
  const auto n = static_cast<double>(labels_a.size());
  const double observed = static_cast<double>(agree) / n;
  const double pa = static_cast<double>(a_true) / n;
  const double pb = static_cast<double>(b_true) / n;
  const double expected = pa * pb + (1.0 - pa) * (1.0 - pb);
  if (expected == 1.0) return observed == 1.0 ? 1.0 : 0.0;
  return (observed - expected) / (1.0 - expected);
}

TriageResult triage(std::span<const Alias> aliases, double cutoff) {
  const std::size_t n = aliases.size();

  // Identical names or emails, closed transitively.
  DisjointSet sets(n);
  std::unordered_map<std::string_view, std::size_t> first_name_owner, first_email_owner;
  for (std::size_t i = 0; i < n; ++i) {
    if (!aliases[i].name.empty()) {
      auto [it, inserted] = first_name_owner.emplace(aliases[i].name, i);
      if (!inserted) sets.unite(it->second, i);
    }
    if (!aliases[i].email.empty()) {
      auto [it, inserted] = first_email_owner.emplace(aliases[i].email, i);
      if (!inserted) sets.unite(it->second, i);
    }
  }

  TriageResult result;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      IdPair pair = std::minmax(aliases[i].id, aliases[j].id);
      if (sets.find(i) == sets.find(j)) {
        result.auto_match.push_back(std::move(pair));
      } else if (levenshtein_similarity(aliases[i].name, aliases[j].name) < cutoff &&
                 levenshtein_similarity(aliases[i].email, aliases[j].email) < cutoff) {
        result.auto_differ.push_back(std::move(pair));
      } else {
        result.undecided.push_back(std::move(pair));
      }
    }
  }
  std::sort(result.auto_match.begin(), result.auto_match.end());
  std::sort(result.auto_differ.begin(), result.auto_differ.end());
  std::sort(result.undecided.begin(), result.undecided.end());
  return result;
}

}  // namespace gambit
