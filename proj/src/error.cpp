#include "paucity/error.hpp"

namespace paucity {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return "ParseError";
    case ErrorKind::DegreeTooLow:
      return "DegreeTooLow";
    case ErrorKind::NonPositiveLeading:
      return "NonPositiveLeading";
    case ErrorKind::LengthMismatch:
      return "LengthMismatch";
    case ErrorKind::UnsupportedS:
      return "UnsupportedS";
    case ErrorKind::InvalidArgument:
      return "InvalidArgument";
    case ErrorKind::MemoryBudgetExceeded:
      return "MemoryBudgetExceeded";
    case ErrorKind::BudgetExceeded:
      return "BudgetExceeded";
    case ErrorKind::ConvergenceFailure:
      return "ConvergenceFailure";
    case ErrorKind::RootSearchTooLarge:
      return "RootSearchTooLarge";
    case ErrorKind::OracleMismatch:
      return "OracleMismatch";
  }
  return "Unknown";
}

}  // namespace paucity
