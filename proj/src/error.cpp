#include "dmu/error.hpp"

namespace dmu {

std::string_view to_string(ErrorCode c) noexcept {
  switch (c) {
    case ErrorCode::InvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::ResolutionTooSmall: return "RESOLUTION_TOO_SMALL";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::QuadratureCapExceeded: return "QUADRATURE_CAP_EXCEEDED";
    case ErrorCode::SingularAtom: return "SINGULAR_ATOM";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::CoronaConditionFails: return "CORONA_CONDITION_FAILS";
    case ErrorCode::DegreeCapExceeded: return "DEGREE_CAP_EXCEEDED";
    case ErrorCode::CaseTwoRequired: return "CASE_TWO_REQUIRED";
    case ErrorCode::EtaNotPositive: return "ETA_NOT_POSITIVE";
    case ErrorCode::InvalidBudget: return "INVALID_BUDGET";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::MalformedJson: return "MALFORMED_JSON";
    case ErrorCode::OffCircle: return "OFF_CIRCLE";
    case ErrorCode::NonpositiveWeight: return "NONPOSITIVE_WEIGHT";
    case ErrorCode::DuplicateAtom: return "DUPLICATE_ATOM";
    case ErrorCode::UnknownKey: return "UNKNOWN_KEY";
    case ErrorCode::MissingField: return "MISSING_FIELD";
    case ErrorCode::InvalidParam: return "INVALID_PARAM";
    case ErrorCode::UnknownCommand: return "UNKNOWN_COMMAND";
  }
  return "UNKNOWN";
}

}  // namespace dmu
