#include "ecag/errors.hpp"

namespace ecag {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonPrimeP: return "NonPrimeP";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::SingularCurve: return "SingularCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::HasseViolation: return "HasseViolation";
    case ErrorKind::DecompositionFailure: return "DecompositionFailure";
    case ErrorKind::StructureMismatch: return "StructureMismatch";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::InvalidType: return "InvalidType";
    case ErrorKind::DuplicateElement: return "DuplicateElement";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::DivisorPointInD: return "DivisorPointInD";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::UnsupportedK: return "UnsupportedK";
    case ErrorKind::FunctionPole: return "FunctionPole";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::ConfigParse: return "ConfigParse";
    case ErrorKind::FileIO: return "FileIO";
  }
  return "Error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ConfigParse:
    case ErrorKind::FileIO:
      return 1;
    case ErrorKind::TooLarge:
    case ErrorKind::CapExceeded:
      return 3;
    default:
      return 2;
  }
}

}  // namespace ecag
