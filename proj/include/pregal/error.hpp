#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pregal {

enum class ErrorKind {
  BoundExceeded,
  InvalidInput,
  ParseError,
  DegreeMismatch,
  NotSubgroup,
  NotNormal,
  NotCoreFree,
  NotAComplement,
  NotNormalComplement,
  NotZSProduct,
  NotCharacteristic,
  NotAHomomorphism,
  NotSurjective,
  NotSimple,
  HypothesisFailed,
  CenterNotTrivial,
  NoRationalPoint,
  EmptyTupleSet,
  BadExponent,
  NotWeaklyRational,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every toolkit operation. The kind drives the CLI
/// exit code (BoundExceeded -> 3, everything else -> 2).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ", column " +
                                         std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace pregal
