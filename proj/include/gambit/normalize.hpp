#pragma once

#include <istream>
#include <set>
#include <string>
#include <string_view>

namespace gambit {

/// An alias exactly as recorded in a repository or CSV file.
struct RawAlias {
  std::string id;
  std::string name;
  std::string email;

  bool operator==(const RawAlias&) const = default;
};

/// A preprocessed alias together with the entities the matchers compare.
///
/// `name` and `email` contain only [a-z], single spaces and (email only) '@'.
/// first/penultimate/last are whitespace-separated tokens of `name`; all three
/// coincide for a one-token name and are empty for an empty name.
/// `email_base` is the part of `email` before the first '@'.
struct Alias {
  std::string id;
  std::string name;
  std::string email;
  std::string first_name;
  std::string penultimate_name;
  std::string last_name;
  std::string email_base;

  bool operator==(const Alias&) const = default;
};

/// Tokens dropped from names and emails during preprocessing.
class StopWords {
 public:
  /// Common placeholder strings plus time-zone abbreviations.
  static StopWords defaults();

  /// One token per line; '#' starts a comment. Tokens are lowercased.
  static StopWords parse(std::istream& in);
  static StopWords load(const std::string& path);

  StopWords() = default;
  explicit StopWords(std::set<std::string, std::less<>> words);

  bool contains(std::string_view token) const {
    return words_.find(token) != words_.end();
  }
  const std::set<std::string, std::less<>>& words() const { return words_; }

 private:
  std::set<std::string, std::less<>> words_;
};

/// Maps UTF-8 text to its closest ASCII spelling. Latin letters lose their
/// diacritics, a few letters expand ("ß" -> "ss"), anything else non-ASCII
/// (and malformed UTF-8) is dropped. ASCII passes through unchanged.
std::string transliterate(std::string_view utf8);

/// Full cleaning pipeline for one field; `keep_at` is true for emails.
std::string clean_field(std::string_view raw, bool keep_at,
                        const StopWords& stop_words);

struct CleanedFields {
  std::string name;
  std::string email;
};

CleanedFields preprocess(const RawAlias& raw, const StopWords& stop_words);

/// Splits already cleaned strings into the matching entities.
Alias extract_entities(std::string name, std::string email, std::string id);

/// preprocess + extract_entities.
Alias make_alias(const RawAlias& raw, const StopWords& stop_words);

}  // namespace gambit
