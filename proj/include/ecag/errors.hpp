#pragma once

#include <stdexcept>
#include <string>

namespace ecag {

enum class ErrorKind {
  NonPrimeP,
  ReducibleModulus,
  DegreeMismatch,
  ZeroInverse,
  SingularCurve,
  PointNotOnCurve,
  HasseViolation,
  DecompositionFailure,
  StructureMismatch,
  UnknownPoint,
  InvalidType,
  DuplicateElement,
  KOutOfRange,
  TooLarge,
  ParameterOutOfRange,
  DivisorPointInD,
  RankDeficient,
  DegenerateBasis,
  UnsupportedK,
  FunctionPole,
  InvariantViolation,
  CapExceeded,
  ConfigParse,
  FileIO,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

/// Process exit code a given failure maps to: 1 usage/config, 2 broken
/// invariant, 3 size cap.
int exit_code_for(ErrorKind kind);

}  // namespace ecag
