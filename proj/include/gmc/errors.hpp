#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gmc {

// Base class of every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input document (bad JSON, unknown keys, non-integer numbers...).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition (e.g. a matrix that is
// not normalized, a graph that failed validation).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The requested theorem does not apply to the given graph.
class InapplicableError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the int64 range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// An exhaustive enumeration would exceed its configured cap. `needed` is
// the size the enumeration would have required, saturated at UINT64_MAX.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& what, std::uint64_t needed)
      : Error(what), needed_(needed) {}

  std::uint64_t needed() const noexcept { return needed_; }

 private:
  std::uint64_t needed_;
};

}  // namespace gmc
