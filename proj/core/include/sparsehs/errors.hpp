#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparsehs {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or out-of-contract input: bad ids, unparsable files,
/// violated preconditions.
class InputError : public Error {
 public:
  explicit InputError(const std::string& what) : Error(what) {}
};

/// A search ran out of its node budget before it could prove its answer.
/// Carries the number of nodes expanded when the budget tripped.
class ResourceLimitError : public Error {
 public:
  ResourceLimitError(const std::string& what, std::uint64_t nodes)
      : Error(what), nodes_(nodes) {}

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  std::uint64_t nodes_;
};

}  // namespace sparsehs
