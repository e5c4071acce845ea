#include <gtest/gtest.h>

#include <algorithm>
#include <iterator>
#include <random>
#include <sstream>

#include "gambit/normalize.hpp"

namespace gambit {
namespace {

CleanedFields clean(const std::string& name, const std::string& email) {
  return preprocess({"id", name, email}, StopWords::defaults());
}

TEST(Preprocess, CamelCaseDelimitersDigitsAndCase) {
  auto c = clean("JohnDoe", "John.Doe42@Example.COM");
  EXPECT_EQ(c.name, "john doe");
  EXPECT_EQ(c.email, "john doe@example com");
}

TEST(Preprocess, EmptyInput) {
  auto c = clean("", "");
  EXPECT_EQ(c.name, "");
  EXPECT_EQ(c.email, "");
}

TEST(Preprocess, AccentsAndStopWords) {
  auto c = clean("José Peña Jr.", "jose@x.io");
  EXPECT_EQ(c.name, "jose pena");
  EXPECT_EQ(c.email, "jose@x io");
}

TEST(Preprocess, AccentedCamelCaseStillSplits) {
  EXPECT_EQ(clean("JoséPeña", "").name, "jose pena");
  EXPECT_EQ(clean("ÉmileZola", "").name, "emile zola");
}

TEST(Preprocess, AtSignOnlySurvivesInEmail) {
  auto c = clean("john@doe", "john@doe");
  EXPECT_EQ(c.name, "johndoe");
  EXPECT_EQ(c.email, "john@doe");
}

TEST(Preprocess, AllDelimitersBecomeWhitespace) {
  EXPECT_EQ(clean("a+b-c,d.e_f;g", "").name, "a b c d e f g");
}

TEST(Preprocess, StopWordsAreWholeTokensOnly) {
  EXPECT_EQ(clean("Adminah Admin", "").name, "adminah");
  EXPECT_EQ(clean("John Doe (UTC)", "").name, "john doe");
  // Stop words are also dropped from emails, token-wise.
  EXPECT_EQ(clean("", "jdoe@users.noreply.github.com").email,
            "jdoe@users github com");
}

TEST(Preprocess, SupplementaryLetters) {
  EXPECT_EQ(clean("Günther Straße", "").name, "gunther strasse");
  EXPECT_EQ(clean("Łukasz Øster Æbelø", "").name, "lukasz oster aebelo");
}

TEST(Preprocess, DecomposedInputMatchesPrecomposed) {
  // "e" followed by U+0301 COMBINING ACUTE ACCENT.
  EXPECT_EQ(clean("Jose\xCC\x81", "").name, "jose");
}

TEST(Preprocess, NonLatinAndMalformedBytesAreDropped) {
  EXPECT_EQ(clean("张伟 Wei", "").name, "wei");
  EXPECT_EQ(clean("ab\xFF\xC3", "").name, "ab");
}

TEST(Preprocess, NonBreakingSpaceSeparatesTokens) {
  EXPECT_EQ(clean("jose\xC2\xA0pena", "").name, "jose pena");
}

TEST(Preprocess, CustomStopWordsReplaceDefaults) {
  std::istringstream file("# custom list\nBot  \n\n ci # trailing comment\n");
  const StopWords words = StopWords::parse(file);
  EXPECT_EQ(words.words().size(), 2u);
  auto c = preprocess({"x", "CI Bot Jr", "bot@ci.org"}, words);
  EXPECT_EQ(c.name, "jr");
  EXPECT_EQ(c.email, "bot@ci org");
}

bool in_output_alphabet(const std::string& s, bool email) {
  for (char c : s) {
    if (!((c >= 'a' && c <= 'z') || c == ' ' || (email && c == '@'))) return false;
  }
  return true;
}

// Random byte soup with a bias towards interesting characters.
std::string random_unicode(std::mt19937_64& rng) {
  static const std::vector<std::string> pieces = {
      "a", "Z", "é", "Ñ", "ß", "@", ".", "-", "_", " ", "\t", "7", "!", "ø",
      "中", "\xCC\x81", "\xFF", "Jr", "utc", "McD", "Ł", "\xC2\xA0", "(", "'"};
  std::uniform_int_distribution<std::size_t> len(0, 12);
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::string s;
  for (std::size_t k = len(rng); k > 0; --k) s += pieces[pick(rng)];
  return s;
}

TEST(PreprocessProperty, OutputAlphabetAndIdempotence) {
  std::mt19937_64 rng(7);
  const auto stop = StopWords::defaults();
  for (int iter = 0; iter < 5000; ++iter) {
    RawAlias raw{"id", random_unicode(rng), random_unicode(rng)};
    const auto once = preprocess(raw, stop);
    ASSERT_TRUE(in_output_alphabet(once.name, false)) << raw.name;
    ASSERT_TRUE(in_output_alphabet(once.email, true)) << raw.email;
    EXPECT_EQ(once.name.find("  "), std::string::npos);
    EXPECT_TRUE(once.name.empty() || (once.name.front() != ' ' && once.name.back() != ' '));

    const auto twice = preprocess({"id", once.name, once.email}, stop);
    ASSERT_EQ(twice.name, once.name) << raw.name;
    ASSERT_EQ(twice.email, once.email) << raw.email;
  }
}

TEST(ExtractEntities, FourTokenName) {
  Alias a = extract_entities("john ronald reuel tolkien", "jrrt@x com", "t");
  EXPECT_EQ(a.first_name, "john");
  EXPECT_EQ(a.penultimate_name, "reuel");
  EXPECT_EQ(a.last_name, "tolkien");
  EXPECT_EQ(a.email_base, "jrrt");
  EXPECT_EQ(a.id, "t");
}

TEST(ExtractEntities, SingleToken) {
  Alias a = extract_entities("ada", "ada@y org", "x");
  EXPECT_EQ(a.first_name, "ada");
  EXPECT_EQ(a.penultimate_name, "ada");
  EXPECT_EQ(a.last_name, "ada");
  EXPECT_EQ(a.email_base, "ada");
}

TEST(ExtractEntities, TwoTokensPenultimateIsFirst) {
  Alias a = extract_entities("john doe", "", "x");
  EXPECT_EQ(a.penultimate_name, "john");
}

TEST(ExtractEntities, NoAtSignMeansWholeEmail) {
  EXPECT_EQ(extract_entities("john doe", "no atsign", "x").email_base, "no atsign");
}

TEST(ExtractEntities, FirstAtSignWins) {
  EXPECT_EQ(extract_entities("", "a@b@c", "x").email_base, "a");
}

TEST(ExtractEntities, EmptyName) {
  Alias a = extract_entities("", "", "x");
  EXPECT_TRUE(a.first_name.empty());
  EXPECT_TRUE(a.penultimate_name.empty());
  EXPECT_TRUE(a.last_name.empty());
  EXPECT_TRUE(a.email_base.empty());
}

TEST(ExtractEntitiesProperty, EntitiesAreTokensAndPrefix) {
  std::mt19937_64 rng(11);
  const auto stop = StopWords::defaults();
  for (int iter = 0; iter < 2000; ++iter) {
    const Alias a = make_alias({"id", random_unicode(rng), random_unicode(rng)}, stop);
    std::istringstream tokens(a.name);
    std::vector<std::string> parts{std::istream_iterator<std::string>(tokens), {}};
    for (const auto* entity : {&a.first_name, &a.penultimate_name, &a.last_name}) {
      if (parts.empty()) {
        EXPECT_TRUE(entity->empty());
      } else {
        EXPECT_NE(std::find(parts.begin(), parts.end(), *entity), parts.end());
      }
    }
    EXPECT_EQ(a.email.rfind(a.email_base, 0), 0u);
  }
}

}  // namespace
}  // namespace gambit
