#include "picknorm/error.hpp"

namespace picknorm {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kDuplicateSite: return "DuplicateSite";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kDomainViolation: return "DomainViolation";
    case ErrorCode::kEmptyTargets: return "EmptyTargets";
    case ErrorCode::kUnknownBackend: return "UnknownBackend";
    case ErrorCode::kNonpositiveLevel: return "NonpositiveLevel";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kNotAnAlgebra: return "NotAnAlgebra";
    case ErrorCode::kUnsupportedForSubalgebra: return "UnsupportedForSubalgebra";
    case ErrorCode::kInfeasibleCoset: return "InfeasibleCoset";
    case ErrorCode::kGridTooCoarse: return "GridTooCoarse";
    case ErrorCode::kEigensolveFailure: return "EigensolveFailure";
    case ErrorCode::kBracketFailure: return "BracketFailure";
    case ErrorCode::kTailBoundFailure: return "TailBoundFailure";
    case ErrorCode::kSolverStall: return "SolverStall";
    case ErrorCode::kSearchStall: return "SearchStall";
    case ErrorCode::kCertificateRejected: return "CertificateRejected";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kEigensolveFailure:
    case ErrorCode::kBracketFailure:
    case ErrorCode::kTailBoundFailure:
    case ErrorCode::kSolverStall:
    case ErrorCode::kSearchStall:
      return false;
    default:
      return true;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace picknorm
