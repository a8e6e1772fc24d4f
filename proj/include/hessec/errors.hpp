#pragma once

#include <stdexcept>
#include <string>

namespace hessec {

// Every failure mode the library can signal.  CLI maps these onto exit codes:
// genericity exhaustion -> 2, bad input -> 3, everything else surfacing as a
// verification failure -> 1.
enum class Err {
  NotPrime,
  TooSmall,
  BadCharacteristic,
  DivisionByZero,
  FieldMismatch,
  ZeroInput,
  ConstantInput,
  CharacteristicHazard,
  NotSquarefree,
  DuplicateAbscissa,
  SyntaxError,
  NotHomogeneous,
  DegreeMismatch,
  DegreeTooSmall,
  DegreeBoundViolated,
  LineInsideCurve,
  SingularPoint,
  NonReducedBaseLocus,
  WrongSingularCount,
  NonNodalFiber,
  GenericityExhausted,
  DegeneratePencil,
  MemberSingular,
  FlexCountMismatch,
  UnexpectedFlexDeficit,
  CensusCountMismatch,
  DegenerateHesseCurve,
  DecompositionMismatch,
  ExtensionTooLarge,
  BadInput,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace hessec
