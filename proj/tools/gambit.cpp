// Command-line front end: extract -> disambiguate -> evaluate / sweep / triage.
//
// Exit status: 0 success, 1 usage error, 2 input error, 3 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "gambit/clustering.hpp"
#include "gambit/error.hpp"
#include "gambit/evaluation.hpp"
#include "gambit/io.hpp"
#include "gambit/normalize.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kInput = 2, kInternal = 3 };

struct CommonOptions {
  std::string method = "gambit";
  std::string measure = "lev";
  double threshold = 0.95;
  std::size_t min_length = 3;
  std::string stop_words;
  unsigned threads = 0;
};

gambit::StopWords load_stop_words(const CommonOptions& opt) {
  return opt.stop_words.empty() ? gambit::StopWords::defaults()
                                : gambit::StopWords::load(opt.stop_words);
}

std::vector<gambit::Alias> load_aliases(const std::string& path,
                                        const CommonOptions& opt) {
  const auto raw = gambit::read_aliases(path);
  const auto stop = load_stop_words(opt);
  std::vector<gambit::Alias> aliases;
  aliases.reserve(raw.size());
  for (const auto& r : raw) aliases.push_back(gambit::make_alias(r, stop));
  std::cerr << "read " << aliases.size() << " aliases from " << path << '\n';
  return aliases;
}

// Writes to `path`, or to stdout for "" and "-".
template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gambit::InputError("cannot open '" + path + "' for writing");
  fn(out);
  if (!out) throw gambit::InputError("failed writing '" + path + "'");
}

// "0.5:1.0:0.05" or "0.8,0.9,0.95".
std::vector<double> parse_thresholds(const std::string& spec) {
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) {
      throw gambit::UsageError("bad threshold value '" + s + "' in '" + spec + "'");
    }
    return v;
  };
  std::vector<std::string> parts;
  std::string part;
  const char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::istringstream in(spec);
  while (std::getline(in, part, sep)) parts.push_back(part);

  std::vector<double> out;
  if (sep == ':') {
    if (parts.size() != 3) {
      throw gambit::UsageError("threshold range must be start:stop:step");
    }
    out = gambit::threshold_range(to_double(parts[0]), to_double(parts[1]),
                                  to_double(parts[2]));
  } else {
    for (const auto& p : parts) out.push_back(to_double(p));
  }
  for (double t : out) {
    if (t < 0.0 || t > 1.0) throw gambit::UsageError("thresholds must lie in [0, 1]");
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void print_report(std::ostream& out, const gambit::EvalReport& r) {
  out << "tp=" << r.true_positives << " fp=" << r.false_positives
      << " fn=" << r.false_negatives << '\n'
      << std::fixed << std::setprecision(6) << "precision=" << r.precision
      << " recall=" << r.recall << " f1=" << r.f1 << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Disambiguate author aliases (name + email) into identities"};
  app.require_subcommand(1);

  CommonOptions common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--min-len", common.min_length,
                    "Strings shorter than this never count as similar")
        ->check(CLI::PositiveNumber);
    sub->add_option("--stop-words", common.stop_words,
                    "Stop-word file (one token per line) replacing the defaults")
        ->check(CLI::ExistingFile);
    sub->add_option("--threads", common.threads,
                    "Scoring threads (default: $GAMBIT_THREADS or all cores)");
  };

  // disambiguate
  std::string input, output;
  auto* dis = app.add_subcommand("disambiguate", "Cluster aliases into authors");
  dis->add_option("input", input, "Alias CSV (id,name,email)")->required();
  dis->add_option("-o,--output", output, "Partition CSV (default: stdout)");
  dis->add_option("--method", common.method, "gambit, bird or simple")
                         ->check(CLI::IsMember({"gambit", "bird", "simple"}));
  auto* measure_opt = dis->add_option("--measure", common.measure, "lev or jw")
                          ->check(CLI::IsMember({"lev", "jw"}));
  auto* threshold_opt = dis->add_option("--threshold", common.threshold,
                                        "Similarity threshold t")
                            ->check(CLI::Range(0.0, 1.0));
  add_common(dis);

  // evaluate
  std::string pred_path, truth_path, json_path;
  auto* eval = app.add_subcommand("evaluate", "Pairwise precision/recall/F1");
  eval->add_option("--pred", pred_path, "Predicted partition CSV")->required();
  eval->add_option("--truth", truth_path, "Ground-truth partition CSV")->required();
  eval->add_option("--json", json_path, "Also write the report as JSON");

  // sweep
  std::string thresholds_spec = "0.5:1.0:0.05";
  std::string methods_spec = "gambit,bird,simple";
  std::string measures_spec = "lev,jw";
  std::string pr_table_path;
  bool no_timing = false;
  auto* sw = app.add_subcommand("sweep", "Evaluate methods over a threshold grid");
  sw->add_option("input", input, "Alias CSV (id,name,email)")->required();
  sw->add_option("--truth", truth_path, "Ground-truth partition CSV")->required();
  sw->add_option("-o,--output", output, "Sweep CSV (default: stdout)");
  sw->add_option("--thresholds", thresholds_spec, "start:stop:step or comma list");
  sw->add_option("--methods", methods_spec, "Comma-separated methods");
  sw->add_option("--measures", measures_spec, "Comma-separated measures");
  sw->add_option("--pr-table", pr_table_path, "Write a wide precision/recall table");
  sw->add_flag("--no-timing", no_timing, "Write 0 for wall_time_ms (reproducible output)");
  add_common(sw);

  // triage
  std::string out_dir = ".";
  double cutoff = 0.5;
  auto* tri = app.add_subcommand("triage", "Pre-label pairs for ground-truth creation");
  tri->add_option("input", input, "Alias CSV (id,name,email)")->required();
  tri->add_option("--out-dir", out_dir, "Directory for the three pair files");
  tri->add_option("--cutoff", cutoff,
                  "Pairs below this Levenshtein similarity for name and email are "
                  "marked different")
      ->check(CLI::Range(0.0, 1.0));
  add_common(tri);

  // extract
  std::string log_path = "-";
  auto* ext = app.add_subcommand("extract", "Build an alias CSV from name<TAB>email lines");
  ext->add_option("log", log_path, "Log dump (default: stdin)");
  ext->add_option("-o,--output", output, "Alias CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dis) {
      const auto method = gambit::parse_method(common.method);
      if (method == gambit::Method::Simple &&
          (threshold_opt->count() > 0 || measure_opt->count() > 0)) {
        std::cerr << "warning: --threshold/--measure are ignored by the simple method\n";
      }
      gambit::MatcherConfig cfg{common.threshold, gambit::parse_measure(common.measure),
                                common.min_length};
      const auto aliases = load_aliases(input, common);
      const auto partition = gambit::disambiguate(aliases, method, cfg, common.threads);
      std::cerr << partition.author_count() << " authors\n";
      with_output(output, [&](std::ostream& out) { gambit::write_partition(out, partition); });
    } else if (*eval) {
      const auto predicted = gambit::read_partition(pred_path);
      const auto truth = gambit::read_partition(truth_path);
      const auto report = gambit::evaluate(predicted, truth);
      print_report(std::cout, report);
      if (!json_path.empty()) {
        nlohmann::json j = {{"tp", report.true_positives},
                            {"fp", report.false_positives},
                            {"fn", report.false_negatives},
                            {"precision", report.precision},
                            {"recall", report.recall},
                            {"f1", report.f1}};
        with_output(json_path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
      }
    } else if (*sw) {
      gambit::SweepOptions opt;
      for (const auto& m : split_list(methods_spec)) opt.methods.push_back(gambit::parse_method(m));
      for (const auto& m : split_list(measures_spec)) opt.measures.push_back(gambit::parse_measure(m));
      opt.thresholds = parse_thresholds(thresholds_spec);
      opt.min_length = common.min_length;
      opt.threads = common.threads;
      const auto aliases = load_aliases(input, common);
      const auto truth = gambit::read_partition(truth_path);
      const auto result = gambit::sweep(aliases, truth, opt);
      std::cerr << result.rows.size() << " sweep rows\n";
      with_output(output, [&](std::ostream& out) {
        gambit::write_sweep_csv(out, result, !no_timing);
      });
      if (!pr_table_path.empty()) {
        with_output(pr_table_path, [&](std::ostream& out) {
          gambit::write_precision_recall_table(out, result);
        });
      }
    } else if (*tri) {
      const auto aliases = load_aliases(input, common);
      const auto result = gambit::triage(aliases, cutoff);
      std::filesystem::create_directories(out_dir);
      const std::filesystem::path dir(out_dir);
      with_output((dir / "auto_match.csv").string(),
                  [&](std::ostream& out) { gambit::write_pairs(out, result.auto_match); });
      with_output((dir / "auto_differ.csv").string(),
                  [&](std::ostream& out) { gambit::write_pairs(out, result.auto_differ); });
      with_output((dir / "undecided.csv").string(),
                  [&](std::ostream& out) { gambit::write_pairs(out, result.undecided); });
      std::cerr << result.auto_match.size() << " auto-match, " << result.auto_differ.size()
                << " auto-differ, " << result.undecided.size() << " undecided pairs\n";
    } else if (*ext) {
      gambit::LogExtraction result;
      if (log_path == "-") {
        result = gambit::extract_from_log(std::cin);
      } else {
        std::ifstream in(log_path, std::ios::binary);
        if (!in) throw gambit::InputError("cannot open '" + log_path + "' for reading");
        result = gambit::extract_from_log(in);
      }
      if (result.skipped_lines > 0) {
        std::cerr << "warning: skipped " << result.skipped_lines << " lines without a tab\n";
      }
      std::cerr << result.aliases.size() << " distinct aliases\n";
      with_output(output, [&](std::ostream& out) { gambit::write_aliases(out, result.aliases); });
    }
  } catch (const gambit::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const gambit::InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
