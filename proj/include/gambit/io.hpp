#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "gambit/clustering.hpp"
#include "gambit/evaluation.hpp"
#include "gambit/normalize.hpp"

namespace gambit {

/// One CSV record per call; handles quoted fields with embedded commas,
/// quotes and newlines. Accepts LF and CRLF. Returns false at end of input.
/// `line` is advanced past every physical line consumed.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line);

/// Quotes a field when it contains a comma, quote, CR or LF.
std::string csv_escape(std::string_view field);

/// Alias file with header `id,name,email`. Throws InputError on a missing
/// header, a row with the wrong number of fields (message names the line) or
/// a duplicate id (DuplicateAliasId).
std::vector<RawAlias> read_aliases(std::istream& in);
std::vector<RawAlias> read_aliases(const std::string& path);

void write_aliases(std::ostream& out, std::span<const RawAlias> aliases);
void write_aliases(const std::string& path, std::span<const RawAlias> aliases);

struct LogExtraction {
  std::vector<RawAlias> aliases;
  std::size_t skipped_lines = 0;  // non-empty lines without a tab
};

/// Reads `name<TAB>email` lines (e.g. `git log --format='%an%x09%ae'`),
/// keeps the first occurrence of every distinct pair and numbers them
/// a0001, a0002, ...
LogExtraction extract_from_log(std::istream& in);

/// Partition file with header `alias_id,author_id`, rows sorted by alias id.
void write_partition(std::ostream& out, const Partition& partition);
void write_partition(const std::string& path, const Partition& partition);
Partition read_partition(std::istream& in);
Partition read_partition(const std::string& path);

/// `alias_a,alias_b` pair list.
void write_pairs(std::ostream& out, std::span<const IdPair> pairs);

}  // namespace gambit
