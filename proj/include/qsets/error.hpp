#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsets {

/// Malformed or invariant-violating input (bad JSON, self-pairs, width mismatch).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An enumeration exceeded its configured bound.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::size_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace qsets
