#pragma once

#include <stdexcept>
#include <string>

namespace mcfluct {

enum class ErrorCode {
  invalid_argument = 1,
  range = 2,
  domain = 3,
  unsupported_statistics = 4,
  resource = 5,
  internal = 6,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Malformed input text (e.g. a statistics string that does not parse).
class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& what)
      : Error(ErrorCode::invalid_argument, what) {}
};

// An index outside the extent of a table or a value outside a search bracket.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& what) : Error(ErrorCode::range, what) {}
};

// Arguments that violate an operation's preconditions (n_ex > N, x >= 1, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::domain, what) {}
};

class UnsupportedStatisticsError : public Error {
 public:
  explicit UnsupportedStatisticsError(const std::string& what)
      : Error(ErrorCode::unsupported_statistics, what) {}
};

// Enumeration or memory budget would be exceeded.
class ResourceError : public Error {
 public:
  explicit ResourceError(const std::string& what)
      : Error(ErrorCode::resource, what) {}
};

// A computed quantity violated a mathematical identity. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& what)
      : Error(ErrorCode::internal, what) {}
};

}  // namespace mcfluct
