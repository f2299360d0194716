#include "fhq/error.hpp"

namespace fhq {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegral: return "NonIntegral";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NotLaurent: return "NotLaurent";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::NotCentral: return "NotCentral";
    case ErrorKind::InconsistentCoefficients: return "InconsistentCoefficients";
    case ErrorKind::NonzeroResidual: return "NonzeroResidual";
    case ErrorKind::ValidationFailed: return "ValidationFailed";
    case ErrorKind::TDependentEntry: return "TDependentEntry";
    case ErrorKind::NonUnitDeterminant: return "NonUnitDeterminant";
    case ErrorKind::NotScalarMatrix: return "NotScalarMatrix";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace fhq
