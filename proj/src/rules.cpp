#include "gambit/rules.hpp"

#include <algorithm>
#include <string>

#include "gambit/error.hpp"

namespace gambit {

void MatcherConfig::validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw UsageError("threshold must lie in [0, 1], got " +
                     std::to_string(threshold));
  }
  if (min_length < 1) throw UsageError("min_length must be at least 1");
}

double SimilarityVector::top_two_average() const {
  double first = scores[0];
  double second = scores[1];
  if (second > first) std::swap(first, second);
  for (std::size_t k = 2; k < kRuleCount; ++k) {
    if (scores[k] > first) {
      second = first;
      first = scores[k];
    } else if (scores[k] > second) {
      second = scores[k];
    }
  }
  return (first + second) / 2.0;
}

namespace {

class PairScorer {
 public:
  explicit PairScorer(const MatcherConfig& cfg) : cfg_(cfg) {}

  bool long_enough(std::string_view s) const {
    return s.size() >= cfg_.min_length;
  }

  double sim(std::string_view a, std::string_view b) const {
    if (!long_enough(a) || !long_enough(b)) return 0.0;
    return similarity(cfg_.measure, a, b);
  }

  bool equal(std::string_view a, std::string_view b) const {
    return long_enough(a) && long_enough(b) && a == b;
  }

  bool contains(std::string_view haystack, std::string_view needle) const {
    return long_enough(needle) && long_enough(haystack) &&
           haystack.find(needle) != std::string_view::npos;
  }

  // Rule 6 for one direction: initial of FN_x followed by LN_x inside EB_y.
  bool initial_last_in(const Alias& x, const Alias& y) const {
    if (x.first_name.empty() || x.last_name.empty()) return false;
    std::string needle;
    needle.reserve(1 + x.last_name.size());
    needle.push_back(x.first_name.front());
    needle += x.last_name;
    return contains(y.email_base, needle);
  }

  // Rule 7 for one direction: FN_x followed by the initial of LN_x.
  bool first_initial_in(const Alias& x, const Alias& y) const {
    if (x.first_name.empty() || x.last_name.empty()) return false;
    std::string needle = x.first_name;
    needle.push_back(x.last_name.front());
    return contains(y.email_base, needle);
  }

  // Rule 8 for one direction.
  bool both_names_in(const Alias& x, const Alias& y) const {
    return contains(y.email_base, x.first_name) &&
           contains(y.email_base, x.last_name);
  }

 private:
  const MatcherConfig& cfg_;
};

}  // namespace

SimilarityVector score_pair(const Alias& i, const Alias& j,
                            const MatcherConfig& cfg) {
  const PairScorer s(cfg);

  // Name-part similarities, indexed [part of i][part of j] with parts
  // ordered first, penultimate, last.
  const std::string_view parts_i[3] = {i.first_name, i.penultimate_name,
                                       i.last_name};
  const std::string_view parts_j[3] = {j.first_name, j.penultimate_name,
                                       j.last_name};
  double part[3][3];
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) part[a][b] = s.sim(parts_i[a], parts_j[b]);
  }
  constexpr int F = 0, P = 1, L = 2;

  SimilarityVector v;
  auto& r = v.scores;
  r[0] = s.sim(i.name, j.name);
  r[1] = s.equal(i.name, j.name) ? 1.0 : 0.0;
  r[2] = std::min(part[F][F], std::max({part[L][L], part[L][P], part[P][L]}));
  r[3] = std::min(part[F][L], std::max({part[P][F], part[L][P], part[L][F]}));
  r[4] = std::min(part[L][F], std::max({part[P][L], part[F][P], part[F][L]}));
  r[5] = s.initial_last_in(i, j) || s.initial_last_in(j, i) ? 1.0 : 0.0;
  r[6] = s.first_initial_in(i, j) || s.first_initial_in(j, i) ? 1.0 : 0.0;
  r[7] = s.both_names_in(i, j) || s.both_names_in(j, i) ? 2.0 : 0.0;
  r[8] = s.equal(i.email, j.email) ? 2.0 : 0.0;
  r[9] = s.sim(i.email_base, j.email_base);
  return v;
}

bool is_match(const SimilarityVector& v, const MatcherConfig& cfg) {
  return v.top_two_average() >= cfg.threshold;
}

bool gambit_match(const Alias& i, const Alias& j, const MatcherConfig& cfg) {
  return is_match(score_pair(i, j, cfg), cfg);
}

}  // namespace gambit
