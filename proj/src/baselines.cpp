#include "gambit/baselines.hpp"

#include <algorithm>
#include <string>
#include <string_view>

namespace gambit {

namespace {

bool long_enough(std::string_view s, std::size_t min_length) {
  return s.size() >= min_length;
}

bool gated_equal(std::string_view a, std::string_view b, std::size_t min_length) {
  return long_enough(a, min_length) && long_enough(b, min_length) && a == b;
}

bool gated_contains(std::string_view haystack, std::string_view needle,
                    std::size_t min_length) {
  return long_enough(haystack, min_length) && long_enough(needle, min_length) &&
         haystack.find(needle) != std::string_view::npos;
}

bool email_base_conditions(const Alias& x, const Alias& y, std::size_t min_length) {
  const std::string& fn = x.first_name;
  const std::string& ln = x.last_name;
  if (fn.empty() || ln.empty()) return false;
  const std::string_view eb = y.email_base;
  if (gated_contains(eb, fn, min_length) && gated_contains(eb, ln, min_length)) {
    return true;
  }
  if (gated_contains(eb, fn.front() + ln, min_length)) return true;
  return gated_contains(eb, fn + ln.front(), min_length);
}

}  // namespace

bool simple_match(const Alias& i, const Alias& j, std::size_t min_length) {
  return gated_equal(i.name, j.name, min_length) ||
         gated_equal(i.email_base, j.email_base, min_length);
}

bool bird_match(const Alias& i, const Alias& j, const MatcherConfig& cfg) {
  const std::size_t n = cfg.min_length;
  auto at_least_t = [&](std::string_view a, std::string_view b) {
    return long_enough(a, n) && long_enough(b, n) &&
           similarity(cfg.measure, a, b) >= cfg.threshold;
  };

  if (at_least_t(i.name, j.name)) return true;
  if (at_least_t(i.first_name, j.first_name) &&
      at_least_t(i.last_name, j.last_name)) {
    return true;
  }
  if (email_base_conditions(i, j, n) || email_base_conditions(j, i, n)) {
    return true;
  }
  return at_least_t(i.email_base, j.email_base);
}

}  // namespace gambit
