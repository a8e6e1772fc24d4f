#include "hessec/errors.hpp"

namespace hessec {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::TooSmall: return "TooSmall";
    case Err::BadCharacteristic: return "BadCharacteristic";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::ZeroInput: return "ZeroInput";
    case Err::ConstantInput: return "ConstantInput";
    case Err::CharacteristicHazard: return "CharacteristicHazard";
    case Err::NotSquarefree: return "NotSquarefree";
    case Err::DuplicateAbscissa: return "DuplicateAbscissa";
    case Err::SyntaxError: return "SyntaxError";
    case Err::NotHomogeneous: return "NotHomogeneous";
    case Err::DegreeMismatch: return "DegreeMismatch";
    case Err::DegreeTooSmall: return "DegreeTooSmall";
    case Err::DegreeBoundViolated: return "DegreeBoundViolated";
    case Err::LineInsideCurve: return "LineInsideCurve";
    case Err::SingularPoint: return "SingularPoint";
    case Err::NonReducedBaseLocus: return "NonReducedBaseLocus";
    case Err::WrongSingularCount: return "WrongSingularCount";
    case Err::NonNodalFiber: return "NonNodalFiber";
    case Err::GenericityExhausted: return "GenericityExhausted";
    case Err::DegeneratePencil: return "DegeneratePencil";
    case Err::MemberSingular: return "MemberSingular";
    case Err::FlexCountMismatch: return "FlexCountMismatch";
    case Err::UnexpectedFlexDeficit: return "UnexpectedFlexDeficit";
    case Err::CensusCountMismatch: return "CensusCountMismatch";
    case Err::DegenerateHesseCurve: return "DegenerateHesseCurve";
    case Err::DecompositionMismatch: return "DecompositionMismatch";
    case Err::ExtensionTooLarge: return "ExtensionTooLarge";
    case Err::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace hessec
