#include "gambit/normalize.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <vector>

#include "gambit/error.hpp"

namespace gambit {

namespace {

struct TranslitEntry {
  char32_t code_point;
  const char* ascii;
};

constexpr TranslitEntry kTranslitTable[] = {
#include "translit_table.inc"
};

constexpr bool table_is_sorted() {
  for (std::size_t i = 1; i < std::size(kTranslitTable); ++i) {
    if (kTranslitTable[i - 1].code_point >= kTranslitTable[i].code_point) {
      return false;
    }
  }
  return true;
}
static_assert(table_is_sorted());

constexpr std::array<std::string_view, 5> kDefaultWords = {
    "jr", "sr", "admin", "unknown", "noreply"};

// Time-zone abbreviations. Ambiguous ones that are also common given names or
// surnames ("art", "west", "ist", "cat") are left out.
constexpr std::array<std::string_view, 32> kTimeZones = {
    "utc",  "gmt",  "cet",  "cest", "eet",  "eest", "wet",  "bst",
    "est",  "edt",  "cst",  "cdt",  "mst",  "mdt",  "pst",  "pdt",
    "akst", "akdt", "hst",  "aest", "aedt", "acst", "acdt", "awst",
    "jst",  "kst",  "msk",  "nzst", "nzdt", "hkt",  "sgt",  "pht"};

// Decodes one UTF-8 sequence starting at `pos`; returns U+FFFD for malformed
// input and always advances at least one byte.
char32_t next_code_point(std::string_view s, std::size_t& pos) {
  const auto lead = static_cast<unsigned char>(s[pos]);
  int extra = 0;
  char32_t cp = 0;
  if (lead < 0x80) {
    ++pos;
    return lead;
  } else if ((lead & 0xE0) == 0xC0) {
    extra = 1;
    cp = lead & 0x1F;
  } else if ((lead & 0xF0) == 0xE0) {
    extra = 2;
    cp = lead & 0x0F;
  } else if ((lead & 0xF8) == 0xF0) {
    extra = 3;
    cp = lead & 0x07;
  } else {
    ++pos;
    return 0xFFFD;
  }
  if (pos + extra >= s.size()) {
    ++pos;
    return 0xFFFD;
  }
  for (int k = 1; k <= extra; ++k) {
    const auto c = static_cast<unsigned char>(s[pos + k]);
    if ((c & 0xC0) != 0x80) {
      ++pos;
      return 0xFFFD;
    }
    cp = (cp << 6) | (c & 0x3F);
  }
  pos += extra + 1;
  return cp;
}

bool is_unicode_space(char32_t cp) {
  return cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F ||
         cp == 0x205F || cp == 0x3000;
}

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_delimiter(char c) {
  return c == '+' || c == '-' || c == ',' || c == '.' || c == '_' || c == ';';
}

std::string split_camel_case(std::string_view s) {
  std::string out;
  out.reserve(s.size() + s.size() / 4);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0 && is_upper(s[i]) && is_lower(s[i - 1])) out.push_back(' ');
    out.push_back(s[i]);
  }
  return out;
}

}  // namespace

StopWords::StopWords(std::set<std::string, std::less<>> words)
    : words_(std::move(words)) {}

StopWords StopWords::defaults() {
  std::set<std::string, std::less<>> words;
  for (auto w : kDefaultWords) words.emplace(w);
  for (auto w : kTimeZones) words.emplace(w);
  return StopWords(std::move(words));
}

StopWords StopWords::parse(std::istream& in) {
  std::set<std::string, std::less<>> words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    auto first = std::find_if_not(line.begin(), line.end(), is_ascii_space);
    auto last = std::find_if_not(line.rbegin(), line.rend(), is_ascii_space).base();
    if (first >= last) continue;
    std::string token(first, last);
    std::transform(token.begin(), token.end(), token.begin(), [](char c) {
      return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c;
    });
    words.insert(std::move(token));
  }
  return StopWords(std::move(words));
}

StopWords StopWords::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open stop-word file '" + path + "'");
  return parse(in);
}

std::string transliterate(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t pos = 0;
  while (pos < utf8.size()) {
    const char32_t cp = next_code_point(utf8, pos);
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
      continue;
    }
    if (is_unicode_space(cp)) {
      out.push_back(' ');
      continue;
    }
    // Bare combining marks (already decomposed input) and everything without
    // a table entry are dropped.
    auto it = std::lower_bound(
        std::begin(kTranslitTable), std::end(kTranslitTable), cp,
        [](const TranslitEntry& e, char32_t v) { return e.code_point < v; });
    if (it != std::end(kTranslitTable) && it->code_point == cp) {
      out += it->ascii;
    }
  }
  return out;
}

std::string clean_field(std::string_view raw, bool keep_at,
                        const StopWords& stop_words) {
  std::string s = split_camel_case(transliterate(raw));

  std::string filtered;
  filtered.reserve(s.size());
  for (char c : s) {
    if (is_delimiter(c) || is_ascii_space(c)) {
      filtered.push_back(' ');
    } else if (is_lower(c)) {
      filtered.push_back(c);
    } else if (is_upper(c)) {
      filtered.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if (keep_at && c == '@') {
      filtered.push_back(c);
    }
  }

  std::string out;
  out.reserve(filtered.size());
  std::size_t i = 0;
  while (i < filtered.size()) {
    if (filtered[i] == ' ') {
      ++i;
      continue;
    }
    std::size_t j = filtered.find(' ', i);
    if (j == std::string::npos) j = filtered.size();
    std::string_view token(filtered.data() + i, j - i);
    if (!stop_words.contains(token)) {
      if (!out.empty()) out.push_back(' ');
      out.append(token);
    }
    i = j;
  }
  return out;
}

CleanedFields preprocess(const RawAlias& raw, const StopWords& stop_words) {
  return {clean_field(raw.name, false, stop_words),
          clean_field(raw.email, true, stop_words)};
}

Alias extract_entities(std::string name, std::string email, std::string id) {
  Alias alias;
  alias.id = std::move(id);

  std::vector<std::string_view> tokens;
  std::string_view rest(name);
  while (!rest.empty()) {
    auto start = rest.find_first_not_of(' ');
    if (start == std::string_view::npos) break;
    rest.remove_prefix(start);
    auto end = std::min(rest.find(' '), rest.size());
    tokens.push_back(rest.substr(0, end));
    rest.remove_prefix(end);
  }
  if (!tokens.empty()) {
    alias.first_name = tokens.front();
    alias.last_name = tokens.back();
    alias.penultimate_name = tokens[tokens.size() >= 2 ? tokens.size() - 2 : 0];
  }

  alias.email_base = email.substr(0, email.find('@'));
  alias.name = std::move(name);
  alias.email = std::move(email);
  return alias;
}

Alias make_alias(const RawAlias& raw, const StopWords& stop_words) {
  auto cleaned = preprocess(raw, stop_words);
  return extract_entities(std::move(cleaned.name), std::move(cleaned.email),
                          raw.id);
}

}  // namespace gambit
