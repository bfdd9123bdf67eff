#pragma once

#include <stdexcept>
#include <string>

namespace qmswap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed configuration text or command-line flag.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A value parsed fine but violates a type invariant.
class RangeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

enum class NumericErrorKind {
  DegenerateModel,
  StepTooLarge,
  NotConverged,
  ZeroNorm,
  NonPhysicalInput,
};

const char* to_string(NumericErrorKind kind) noexcept;

/// Failure of a numerical routine; `kind()` identifies which contract failed.
class NumericError : public Error {
 public:
  NumericError(NumericErrorKind kind, const std::string& what);

  [[nodiscard]] NumericErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  [[nodiscard]] const std::string& detail() const noexcept { return detail_; }

 private:
  NumericErrorKind kind_;
  std::string detail_;
};

}  // namespace qmswap
