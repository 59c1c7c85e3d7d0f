#ifndef DMU_ERROR_HPP
#define DMU_ERROR_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dmu {

enum class ErrorCode {
  InvalidArgument,
  ResolutionTooSmall,
  ZeroPolynomial,
  QuadratureCapExceeded,
  SingularAtom,
  PreconditionFailed,
  CoronaConditionFails,
  DegreeCapExceeded,
  CaseTwoRequired,
  EtaNotPositive,
  InvalidBudget,
  LengthMismatch,
  // Input-layer codes used by the CLI.
  MalformedJson,
  OffCircle,
  NonpositiveWeight,
  DuplicateAtom,
  UnknownKey,
  MissingField,
  InvalidParam,
  UnknownCommand,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception carrying a machine-readable code. `estimate` is populated when a
/// computation gave up but still has a best value to report.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what, std::optional<double> estimate = std::nullopt)
      : std::runtime_error(what), code_(code), estimate_(estimate) {}

  ErrorCode code() const noexcept { return code_; }
  std::optional<double> estimate() const noexcept { return estimate_; }

private:
  ErrorCode code_;
  std::optional<double> estimate_;
};

}  // namespace dmu

#endif
