#include "gambit/io.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <unordered_set>

#include "gambit/error.hpp"

namespace gambit {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "' for reading");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open '" + path + "' for writing");
  return out;
}

void strip_bom(std::string& field) {
  if (field.rfind("\xEF\xBB\xBF", 0) == 0) field.erase(0, 3);
}

void expect_header(std::istream& in, std::size_t& line,
                   const std::vector<std::string>& expected, const char* what) {
  std::vector<std::string> fields;
  if (!read_csv_record(in, fields, line)) {
    throw InputError(std::string(what) + ": missing header row");
  }
  if (!fields.empty()) strip_bom(fields.front());
  if (fields != expected) {
    std::string want;
    for (const auto& f : expected) want += (want.empty() ? "" : ",") + f;
    throw InputError(std::string(what) + ": expected header '" + want + "'");
  }
}

}  // namespace

bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line) {
  fields.clear();
  int c = in.get();
  if (c == std::char_traits<char>::eof()) return false;
  ++line;

  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (;; c = in.get()) {
    if (c == std::char_traits<char>::eof()) {
      if (quoted) {
        throw InputError("line " + std::to_string(line) +
                         ": unterminated quoted field");
      }
      break;
    }
    const char ch = static_cast<char>(c);
    if (quoted) {
      if (ch == '"') {
        if (in.peek() == '"') {
          field.push_back('"');
          in.get();
        } else {
          quoted = false;
        }
      } else {
        if (ch == '\n') ++line;
        field.push_back(ch);
      }
      continue;
    }
    if (ch == '"' && field.empty() && !was_quoted) {
      quoted = was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(field));
      field.clear();
      was_quoted = false;
    } else if (ch == '\n') {
      break;
    } else if (ch == '\r' && in.peek() == '\n') {
      in.get();
      break;
    } else if (was_quoted) {
      throw InputError("line " + std::to_string(line) +
                       ": unexpected character after closing quote");
    } else {
      field.push_back(ch);
    }
  }
  fields.push_back(std::move(field));
  return true;
}

std::string csv_escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::vector<RawAlias> read_aliases(std::istream& in) {
  std::size_t line = 0;
  expect_header(in, line, {"id", "name", "email"}, "alias file");

  std::vector<RawAlias> out;
  std::set<std::string> seen;
  std::vector<std::string> fields;
  while (true) {
    const std::size_t row_line = line + 1;
    if (!read_csv_record(in, fields, line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 3) {
      throw InputError("alias file line " + std::to_string(row_line) +
                       ": expected 3 fields, found " +
                       std::to_string(fields.size()));
    }
    if (fields[0].empty()) {
      throw InputError("alias file line " + std::to_string(row_line) +
                       ": empty alias id");
    }
    if (!seen.insert(fields[0]).second) throw DuplicateAliasId(fields[0]);
    out.push_back({std::move(fields[0]), std::move(fields[1]), std::move(fields[2])});
  }
  return out;
}

std::vector<RawAlias> read_aliases(const std::string& path) {
  auto in = open_input(path);
  return read_aliases(in);
}

void write_aliases(std::ostream& out, std::span<const RawAlias> aliases) {
  out << "id,name,email\n";
  for (const auto& a : aliases) {
    out << csv_escape(a.id) << ',' << csv_escape(a.name) << ','
        << csv_escape(a.email) << '\n';
  }
}

void write_aliases(const std::string& path, std::span<const RawAlias> aliases) {
  auto out = open_output(path);
  write_aliases(out, aliases);
  if (!out) throw InputError("failed writing '" + path + "'");
}

LogExtraction extract_from_log(std::istream& in) {
  LogExtraction result;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      ++result.skipped_lines;
      continue;
    }
    std::string name = line.substr(0, tab);
    std::string email = line.substr(tab + 1);
    if (!seen.emplace(name, email).second) continue;
    char id[16];
    std::snprintf(id, sizeof id, "a%04zu", result.aliases.size() + 1);
    result.aliases.push_back({id, std::move(name), std::move(email)});
  }
  return result;
}

void write_partition(std::ostream& out, const Partition& partition) {
  out << "alias_id,author_id\n";
  for (const auto& [id, author] : partition.assignment()) {
    out << csv_escape(id) << ',' << csv_escape(author) << '\n';
  }
}

void write_partition(const std::string& path, const Partition& partition) {
  auto out = open_output(path);
  write_partition(out, partition);
  if (!out) throw InputError("failed writing '" + path + "'");
}

Partition read_partition(std::istream& in) {
  std::size_t line = 0;
  expect_header(in, line, {"alias_id", "author_id"}, "partition file");

  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::string> fields;
  while (true) {
    const std::size_t row_line = line + 1;
    if (!read_csv_record(in, fields, line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw InputError("partition file line " + std::to_string(row_line) +
                       ": expected alias_id,author_id");
    }
    rows.emplace_back(std::move(fields[0]), std::move(fields[1]));
  }
  return Partition::from_labels(rows);
}

Partition read_partition(const std::string& path) {
  auto in = open_input(path);
  return read_partition(in);
}

void write_pairs(std::ostream& out, std::span<const IdPair> pairs) {
  out << "alias_a,alias_b\n";
  for (const auto& [a, b] : pairs) out << csv_escape(a) << ',' << csv_escape(b) << '\n';
}

}  // namespace gambit
