#pragma once

#include <stdexcept>
#include <string>

namespace fhq {

enum class ErrorKind {
  NonIntegral,
  SizeGuard,
  RankMismatch,
  IndexOutOfRange,
  NotLaurent,
  Underdetermined,
  NotCentral,
  InconsistentCoefficients,
  NonzeroResidual,
  ValidationFailed,
  TDependentEntry,
  NonUnitDeterminant,
  NotScalarMatrix,
  InvalidArgument,
  Io,
};

const char* to_string(ErrorKind kind);

// Every library failure carries a kind so callers (the CLI in particular)
// can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fhq
