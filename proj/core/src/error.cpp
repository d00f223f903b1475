#include "qwiso/error.hpp"

namespace qwiso {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotPrime: return "NotPrime";
    case ErrorCode::kZeroInSet: return "ZeroInSet";
    case ErrorCode::kNotSymmetric: return "NotSymmetric";
    case ErrorCode::kNotCongruentOneModFour: return "NotCongruentOneModFour";
    case ErrorCode::kImaginaryResidualTooLarge: return "ImaginaryResidualTooLarge";
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kOddDegree: return "OddDegree";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::kUnpairedEigenvalue: return "UnpairedEigenvalue";
    case ErrorCode::kMoreThanOnePair: return "MoreThanOnePair";
    case ErrorCode::kDegenerateBlock: return "DegenerateBlock";
    case ErrorCode::kCOutOfRange: return "COutOfRange";
    case ErrorCode::kClusteringAmbiguous: return "ClusteringAmbiguous";
    case ErrorCode::kPolynomialIllConditioned: return "PolynomialIllConditioned";
    case ErrorCode::kRoundingResidualTooLarge: return "RoundingResidualTooLarge";
    case ErrorCode::kWrongCardinality: return "WrongCardinality";
    case ErrorCode::kNonzeroAtOrigin: return "NonzeroAtOrigin";
    case ErrorCode::kModulusMismatch: return "ModulusMismatch";
    case ErrorCode::kDegreeMismatch: return "DegreeMismatch";
    case ErrorCode::kRecoveredSetMismatch: return "RecoveredSetMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kTooManySets: return "TooManySets";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace qwiso
