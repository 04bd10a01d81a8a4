#include "pentablock/error.hpp"

namespace pentablock {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PoleInDomain: return "PoleInDomain";
    case ErrorKind::ExteriorInput: return "ExteriorInput";
    case ErrorKind::DegenerateBase: return "DegenerateBase";
    case ErrorKind::OutsideBase: return "OutsideBase";
    case ErrorKind::OptimizerFailure: return "OptimizerFailure";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
    case ErrorKind::NotOnRoyalSlice: return "NotOnRoyalSlice";
    case ErrorKind::DenominatorDegenerate: return "DenominatorDegenerate";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::EvaluationDomain: return "EvaluationDomain";
    case ErrorKind::NotOnSmoothBoundary: return "NotOnSmoothBoundary";
    case ErrorKind::DegenerateGradient: return "DegenerateGradient";
    case ErrorKind::NotOnLeviFlat: return "NotOnLeviFlat";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace pentablock
