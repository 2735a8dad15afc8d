#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace genus {

enum class ErrorKind {
  NonUnitDivisor,
  TruncMismatch,
  NonUnitLog,
  NonNilpotentExp,
  DivergentEvaluation,
  ParityError,
  InsufficientData,
  DimensionError,
  InconsistentData,
  UnknownManifold,
  FitError,
  ConvergenceRisk,
  RootNotBracketed,
  ExponentDomainError,
  DomainError,
  TooLarge,
  CatalogError,
};

std::string_view to_string(ErrorKind kind);

/// Failure raised by every library operation; `kind` selects the CLI exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// 2 = validation/data, 3 = numerical failure.
int exit_code(ErrorKind kind);

}  // namespace genus
