#include "core/error.hpp"

namespace beurling {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kConvergence: return "convergence";
    case ErrorCode::kCertification: return "certification";
    case ErrorCode::kTolerance: return "tolerance";
    case ErrorCode::kIo: return "io";
    case ErrorCode::kRange: return "range";
    case ErrorCode::kInternal: return "internal";
  }
  return "unknown";
}

}  // namespace beurling
