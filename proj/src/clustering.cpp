#include "gambit/clustering.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <set>
#include <thread>
#include <unordered_map>

#include "gambit/baselines.hpp"
#include "gambit/error.hpp"

namespace gambit {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::Gambit:
      return "gambit";
    case Method::Bird:
      return "bird";
    case Method::Simple:
      return "simple";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "gambit") return Method::Gambit;
  if (name == "bird") return Method::Bird;
  if (name == "simple") return Method::Simple;
  throw UsageError("unknown method '" + std::string(name) + "'");
}

bool matches(Method method, const Alias& i, const Alias& j,
             const MatcherConfig& cfg) {
  switch (method) {
    case Method::Gambit:
      return gambit_match(i, j, cfg);
    case Method::Bird:
      return bird_match(i, j, cfg);
    case Method::Simple:
      return simple_match(i, j, cfg.min_length);
  }
  return false;
}

// ---------------------------------------------------------------------------
// Partition

Partition Partition::from_labels(
    std::span<const std::pair<std::string, std::string>> rows) {
  // label -> smallest member id
  std::map<std::string_view, std::string_view> canonical;
  std::set<std::string_view> seen;
  for (const auto& [id, label] : rows) {
    if (!seen.insert(id).second) throw DuplicateAliasId(id);
    auto [it, inserted] = canonical.emplace(label, id);
    if (!inserted && id < it->second) it->second = id;
  }
  Partition p;
  for (const auto& [id, label] : rows) {
    p.assignment_.emplace(id, std::string(canonical.at(label)));
  }
  return p;
}

Partition Partition::from_clusters(
    const std::vector<std::vector<std::string>>& clusters) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (const auto& id : clusters[c]) rows.emplace_back(id, std::to_string(c));
  }
  return from_labels(rows);
}

Partition Partition::singletons(std::span<const std::string> ids) {
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(ids.size());
  for (const auto& id : ids) rows.emplace_back(id, id);
  return from_labels(rows);
}

bool Partition::contains(std::string_view id) const {
  return assignment_.find(std::string(id)) != assignment_.end();
}

const std::string& Partition::author_of(std::string_view id) const {
  auto it = assignment_.find(std::string(id));
  if (it == assignment_.end()) {
    throw InputError("alias id '" + std::string(id) + "' not in partition");
  }
  return it->second;
}

bool Partition::same_author(std::string_view a, std::string_view b) const {
  return author_of(a) == author_of(b);
}

std::vector<std::string> Partition::ids() const {
  std::vector<std::string> out;
  out.reserve(assignment_.size());
  for (const auto& [id, author] : assignment_) out.push_back(id);
  return out;
}

std::vector<std::vector<std::string>> Partition::clusters() const {
  std::map<std::string, std::vector<std::string>> by_author;
  for (const auto& [id, author] : assignment_) by_author[author].push_back(id);
  std::vector<std::vector<std::string>> out;
  out.reserve(by_author.size());
  for (auto& [author, members] : by_author) out.push_back(std::move(members));
  return out;
}

std::size_t Partition::author_count() const {
  std::set<std::string_view> authors;
  for (const auto& [id, author] : assignment_) authors.insert(author);
  return authors.size();
}

bool Partition::same_universe(const Partition& other) const {
  return assignment_.size() == other.assignment_.size() &&
         std::equal(assignment_.begin(), assignment_.end(),
                    other.assignment_.begin(),
                    [](const auto& x, const auto& y) { return x.first == y.first; });
}

// ---------------------------------------------------------------------------
// DisjointSet

DisjointSet::DisjointSet(std::size_t n) : parent_(n), size_(n, 1) {
  std::iota(parent_.begin(), parent_.end(), std::size_t{0});
}

std::size_t DisjointSet::find(std::size_t x) {
  std::size_t root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    std::size_t next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSet::unite(std::size_t a, std::size_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  return true;
}

// ---------------------------------------------------------------------------
// Disambiguation

unsigned default_thread_count() {
  if (const char* env = std::getenv("GAMBIT_THREADS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void check_unique_ids(std::span<const Alias> aliases) {
  std::set<std::string_view> seen;
  for (const auto& a : aliases) {
    if (!seen.insert(a.id).second) throw DuplicateAliasId(a.id);
  }
}

}  // namespace

std::vector<IndexPair> matched_pairs(std::span<const Alias> aliases,
                                     Method method, const MatcherConfig& cfg,
                                     unsigned threads) {
  cfg.validate();
  const std::size_t n = aliases.size();
  if (threads == 0) threads = default_thread_count();
  threads = static_cast<unsigned>(
      std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(n, 1)));

  // One result slot per row i; workers claim rows dynamically, so the merge
  // below is ordered regardless of scheduling.
  std::vector<std::vector<std::size_t>> partners(n);
  std::atomic<std::size_t> next_row{0};
  auto work = [&] {
    for (std::size_t i = next_row++; i < n; i = next_row++) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (matches(method, aliases[i], aliases[j], cfg)) {
          partners[i].push_back(j);
        }
      }
    }
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }

  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : partners[i]) out.emplace_back(i, j);
  }
  return out;
}

Partition partition_from_pairs(std::span<const Alias> aliases,
                               std::span<const IndexPair> pairs) {
  DisjointSet sets(aliases.size());
  for (const auto& [i, j] : pairs) sets.unite(i, j);

  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(aliases.size());
  for (std::size_t i = 0; i < aliases.size(); ++i) {
    rows.emplace_back(aliases[i].id, std::to_string(sets.find(i)));
  }
  return Partition::from_labels(rows);
}

Partition disambiguate(std::span<const Alias> aliases, Method method,
                       const MatcherConfig& cfg, unsigned threads) {
  check_unique_ids(aliases);
  const auto pairs = matched_pairs(aliases, method, cfg, threads);
  return partition_from_pairs(aliases, pairs);
}

Partition merge_partitions(const Partition& a, const Partition& b) {
  if (!a.same_universe(b)) {
    throw UniverseMismatch("cannot merge partitions over different alias ids");
  }
  const auto ids = a.ids();
  std::unordered_map<std::string_view, std::size_t> index;
  for (std::size_t k = 0; k < ids.size(); ++k) index.emplace(ids[k], k);

  DisjointSet sets(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    sets.unite(k, index.at(a.author_of(ids[k])));
    sets.unite(k, index.at(b.author_of(ids[k])));
  }
  std::vector<std::pair<std::string, std::string>> rows;
  rows.reserve(ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) {
    rows.emplace_back(ids[k], std::to_string(sets.find(k)));
  }
  return Partition::from_labels(rows);
}

}  // namespace gambit
