#include "qmswap/error.hpp"

namespace qmswap {

const char* to_string(NumericErrorKind kind) noexcept {
  switch (kind) {
    case NumericErrorKind::DegenerateModel:
      return "DegenerateModel";
    case NumericErrorKind::StepTooLarge:
      return "StepTooLarge";
    case NumericErrorKind::NotConverged:
      return "NotConverged";
    case NumericErrorKind::ZeroNorm:
      return "ZeroNorm";
    case NumericErrorKind::NonPhysicalInput:
      return "NonPhysicalInput";
  }
  return "Unknown";
}

NumericError::NumericError(NumericErrorKind kind, const std::string& what)
    : Error(std::string(to_string(kind)) + ": " + what), kind_(kind), detail_(what) {}

}  // namespace qmswap
