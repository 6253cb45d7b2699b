#include "pfaff/errors.hpp"

namespace pfaff {

std::string_view code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::NotARepresentation: return "NotARepresentation";
    case ErrorCode::DegenerateRep: return "DegenerateRep";
    case ErrorCode::NonlinearQuotient: return "NonlinearQuotient";
    case ErrorCode::SampleNotOnCurve: return "SampleNotOnCurve";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::InvalidGroupElement: return "InvalidGroupElement";
    case ErrorCode::EliminationFailed: return "EliminationFailed";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NoSolutionFound: return "NoSolutionFound";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
  }
  return "Unknown";
}

}  // namespace pfaff
