#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rkhsmult {

enum class ErrorKind {
  ZeroConstantTerm,
  InvalidPartCount,
  DegreeOutOfRange,
  ZeroIndex,
  DimensionMismatch,
  OutsideBall,
  UnreliableTail,
  NotCnp,
  SeriesBoundViolated,
  NonRationalValues,
  Parse,
  Validation,
  Config,
};

const char* error_kind_name(ErrorKind kind);

/// Library-wide exception. `kind()` identifies the contract that was
/// violated; the what() string carries the diagnostic text.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

/// Parse failure with a character offset into the offending text.
class ParseError : public Error {
public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::Parse,
              what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace rkhsmult
