#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gambit/normalize.hpp"
#include "gambit/rules.hpp"

namespace gambit {

enum class Method { Gambit, Bird, Simple };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

/// Decision of `method` for one pair. Simple ignores threshold and measure.
bool matches(Method method, const Alias& i, const Alias& j,
             const MatcherConfig& cfg);

/// Assignment of every alias id to an author id.
///
/// Author ids are always canonical: the lexicographically smallest alias id
/// in the cluster. Whatever labels a partition is built from, two partitions
/// with the same clusters compare equal.
class Partition {
 public:
  Partition() = default;

  /// From (alias id, cluster label) rows; labels are arbitrary tokens.
  /// Throws DuplicateAliasId if an alias appears twice.
  static Partition from_labels(
      std::span<const std::pair<std::string, std::string>> rows);
  static Partition from_clusters(
      const std::vector<std::vector<std::string>>& clusters);
  static Partition singletons(std::span<const std::string> ids);

  const std::map<std::string, std::string>& assignment() const {
    return assignment_;
  }
  std::size_t size() const { return assignment_.size(); }
  bool contains(std::string_view id) const;
  /// Throws InputError for unknown ids.
  const std::string& author_of(std::string_view id) const;
  bool same_author(std::string_view a, std::string_view b) const;

  /// Sorted alias ids.
  std::vector<std::string> ids() const;
  /// Clusters with members sorted, ordered by author id.
  std::vector<std::vector<std::string>> clusters() const;
  std::size_t author_count() const;

  bool same_universe(const Partition& other) const;

  bool operator==(const Partition&) const = default;

 private:
  std::map<std::string, std::string> assignment_;
};

/// Union-find with union by size and path compression.
class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n);

  std::size_t find(std::size_t x);
  /// Returns false when both were already in one set.
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

/// Index pair (i < j) into an alias list.
using IndexPair = std::pair<std::size_t, std::size_t>;

/// All matching unordered pairs in lexicographic order. Pairs are scored in
/// parallel on `threads` workers (0 = hardware concurrency); the result does
/// not depend on the worker count.
std::vector<IndexPair> matched_pairs(std::span<const Alias> aliases,
                                     Method method, const MatcherConfig& cfg,
                                     unsigned threads = 0);

/// Partition from a list of matched index pairs, closed transitively.
Partition partition_from_pairs(std::span<const Alias> aliases,
                               std::span<const IndexPair> pairs);

/// Scores every unordered pair and merges matches transitively. Throws
/// DuplicateAliasId if two aliases share an id.
Partition disambiguate(std::span<const Alias> aliases, Method method,
                       const MatcherConfig& cfg, unsigned threads = 0);

/// Finest partition coarser than both inputs. Throws UniverseMismatch when
/// the inputs cover different alias ids.
Partition merge_partitions(const Partition& a, const Partition& b);

/// Worker count used for `threads == 0`: GAMBIT_THREADS if set to a positive
/// integer, else the hardware concurrency (at least 1).
unsigned default_thread_count();

}  // namespace gambit
