#pragma once

#include <stdexcept>
#include <string>

namespace tautilt {

enum class ErrorKind {
  NonAdmissible,
  EmptyQuiver,
  InvalidPresentation,
  UnknownVertex,
  AlgebraMismatch,
  InvalidModule,
  CharacteristicTooSmall,
  DecompositionInconclusive,
  ApproximationVerificationFailed,
  NotTauRigid,
  SupportViolation,
  NotBasic,
  NotComplete,
  ExchangeAssertionFailed,
  HasseMismatch,
  Inconclusive,
  MutationMismatch,
  InvalidComplex,
  InvalidPosition,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// All domain failures surface as this exception; `kind()` identifies the
/// contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace tautilt
