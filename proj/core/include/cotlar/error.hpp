#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cotlar {

enum class ErrorCode {
  NonSymmetric,
  BadDiagonal,
  OffDiagonalOne,
  DuplicateName,
  InvalidGenerator,
  InvalidDescriptor,
  WordTooLong,
  NestedConditionViolated,
  WrongSystem,
  RepDiscoveryFailed,
  DecompositionFailed,
  ConstraintViolated,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every fallible operation in the library. `code()` identifies
/// the failure class; the message carries the offending data.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// The configured word-length cap was exceeded. This is a resource limit, never
/// a mathematical verdict, so callers can catch it separately.
class WordTooLong : public Error {
 public:
  WordTooLong(std::size_t requested, std::size_t cap);

  std::size_t requested() const noexcept { return requested_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t requested_;
  std::size_t cap_;
};

}  // namespace cotlar
