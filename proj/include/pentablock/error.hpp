#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pentablock {

enum class ErrorKind {
  PoleInDomain,
  ExteriorInput,
  DegenerateBase,
  OutsideBase,
  OptimizerFailure,
  ZeroPoint,
  NotOnRoyalSlice,
  DenominatorDegenerate,
  PreconditionViolated,
  EvaluationDomain,
  NotOnSmoothBoundary,
  DegenerateGradient,
  NotOnLeviFlat,
  InvalidArgument,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. `kind()` lets callers branch
/// (the CLI maps kinds onto exit codes) without parsing messages.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace pentablock
