#pragma once

#include <stdexcept>
#include <string>

namespace gambit {

/// Bad or inconsistent input data: unreadable files, malformed rows,
/// duplicate ids, partitions over different alias sets.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two partitions or a partition and an alias list do not cover
/// the same alias ids.
class UniverseMismatch : public InputError {
 public:
  using InputError::InputError;
};

class DuplicateAliasId : public InputError {
 public:
  explicit DuplicateAliasId(const std::string& id)
      : InputError("duplicate alias id '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

/// Invalid arguments to an API call (bad threshold, empty kappa input, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gambit
