#include <gtest/gtest.h>

#include <random>

#include "gambit/similarity.hpp"
#include "oracles.hpp"

namespace gambit {
namespace {

using testing::dp_levenshtein_similarity;
using testing::reference_jaro_winkler;

std::vector<std::string> all_strings(const std::string& alphabet, std::size_t max_len) {
  std::vector<std::string> out{""};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t k = begin; k < end; ++k) {
      for (char c : alphabet) out.push_back(out[k] + c);
    }
    begin = end;
  }
  return out;
}

std::string random_string(std::mt19937_64& rng, std::size_t max_len, int letters) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> ch(0, letters - 1);
  std::string s(len(rng), 'a');
  for (char& c : s) c = static_cast<char>('a' + ch(rng));
  return s;
}

TEST(Levenshtein, KittenSitting) {
  EXPECT_EQ(levenshtein_distance("kitten", "sitting"), 3u);
  EXPECT_NEAR(levenshtein_similarity("kitten", "sitting"), 1.0 - 3.0 / 7.0, 1e-12);
}

TEST(Levenshtein, IdentityAndEmpty) {
  EXPECT_EQ(levenshtein_similarity("", ""), 1.0);
  EXPECT_EQ(levenshtein_similarity("gambit", "gambit"), 1.0);
  EXPECT_EQ(levenshtein_similarity("abc", ""), 0.0);
  EXPECT_EQ(levenshtein_similarity("", "abc"), 0.0);
}

TEST(Levenshtein, ExhaustiveAgainstDpOracle) {
  const auto strings = all_strings("abc", 4);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      ASSERT_NEAR(levenshtein_similarity(a, b), dp_levenshtein_similarity(a, b), 1e-12)
          << a << " / " << b;
    }
  }
}

TEST(Levenshtein, RandomLongerAgainstDpOracle) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 1000; ++k) {
    const auto a = random_string(rng, 30, 4);
    const auto b = random_string(rng, 30, 4);
    ASSERT_NEAR(levenshtein_similarity(a, b), dp_levenshtein_similarity(a, b), 1e-12);
  }
}

TEST(JaroWinkler, MarthaBreakdown) {
  const JaroBreakdown jb = jaro_breakdown("martha", "marhta");
  EXPECT_EQ(jb.common, 6u);
  EXPECT_EQ(jb.transpositions, 1.0);
  EXPECT_EQ(jb.prefix_length, 3u);
  EXPECT_NEAR(jb.jaro, (1.0 + 1.0 + 5.0 / 6.0) / 3.0, 1e-12);
  EXPECT_NEAR(jaro_winkler_similarity("martha", "marhta"), 0.9611, 1e-4);
}

TEST(JaroWinkler, KnownValues) {
  // Classic textbook pairs.
  EXPECT_NEAR(jaro_similarity("dixon", "dicksonx"), 0.7667, 1e-4);
  EXPECT_NEAR(jaro_winkler_similarity("dixon", "dicksonx"), 0.8133, 1e-4);
  EXPECT_NEAR(jaro_winkler_similarity("dwayne", "duane"), 0.84, 1e-4);
}

TEST(JaroWinkler, IdentityDisjointAndEmpty) {
  EXPECT_EQ(jaro_winkler_similarity("abc", "abc"), 1.0);
  EXPECT_EQ(jaro_winkler_similarity("abc", "xyz"), 0.0);
  EXPECT_EQ(jaro_breakdown("abc", "xyz").common, 0u);
  EXPECT_EQ(jaro_winkler_similarity("", ""), 1.0);
  EXPECT_EQ(jaro_winkler_similarity("abc", ""), 0.0);
}

TEST(JaroWinkler, MatchesReferenceImplementation) {
  std::mt19937_64 rng(5);
  const auto strings = all_strings("abc", 4);
  for (const auto& a : strings) {
    for (const auto& b : strings) {
      ASSERT_NEAR(jaro_winkler_similarity(a, b), reference_jaro_winkler(a, b), 1e-12)
          << a << " / " << b;
    }
  }
  for (int k = 0; k < 2000; ++k) {
    const auto a = random_string(rng, 15, 5);
    const auto b = random_string(rng, 15, 5);
    ASSERT_NEAR(jaro_winkler_similarity(a, b), reference_jaro_winkler(a, b), 1e-12);
  }
}

TEST(SimilarityProperty, SymmetryRangeAndPrefixBoost) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5000; ++k) {
    const auto a = random_string(rng, 12, 4);
    const auto b = random_string(rng, 12, 4);
    for (auto m : {SimilarityMeasure::NormalizedLevenshtein, SimilarityMeasure::JaroWinkler}) {
      const double ab = similarity(m, a, b);
      ASSERT_EQ(ab, similarity(m, b, a)) << a << " / " << b;
      ASSERT_GE(ab, 0.0);
      ASSERT_LE(ab, 1.0);
    }
    const JaroBreakdown jb = jaro_breakdown(a, b);
    if (a.empty() || b.empty()) continue;
    const double jw = jaro_winkler_similarity(a, b);
    if (jb.prefix_length == 0) {
      ASSERT_EQ(jw, jb.jaro);
    } else {
      ASSERT_GE(jw, jb.jaro);
    }
    ASSERT_LE(jb.transpositions, static_cast<double>(jb.common));
    ASSERT_LE(jb.prefix_length, 4u);
  }
}

TEST(Measure, ParseAndPrint) {
  EXPECT_EQ(parse_measure("lev"), SimilarityMeasure::NormalizedLevenshtein);
  EXPECT_EQ(parse_measure("jw"), SimilarityMeasure::JaroWinkler);
  EXPECT_EQ(to_string(SimilarityMeasure::JaroWinkler), "jw");
  EXPECT_ANY_THROW(parse_measure("cosine"));
}

}  // namespace
}  // namespace gambit
