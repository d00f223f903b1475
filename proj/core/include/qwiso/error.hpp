#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qwiso {

enum class ErrorCode {
  kInvalidArgument,
  kNotPrime,
  kZeroInSet,
  kNotSymmetric,
  kNotCongruentOneModFour,
  kImaginaryResidualTooLarge,
  kDegreeTooSmall,
  kOddDegree,
  kNotUnitary,
  kResidualTooLarge,
  kUnpairedEigenvalue,
  kMoreThanOnePair,
  kDegenerateBlock,
  kCOutOfRange,
  kClusteringAmbiguous,
  kPolynomialIllConditioned,
  kRoundingResidualTooLarge,
  kWrongCardinality,
  kNonzeroAtOrigin,
  kModulusMismatch,
  kDegreeMismatch,
  kRecoveredSetMismatch,
  kTooLarge,
  kShapeMismatch,
  kTooManySets,
  kParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message is a human-readable diagnostic that names the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qwiso
