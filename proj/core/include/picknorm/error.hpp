#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace picknorm {

enum class ErrorCode {
  kDuplicateSite,
  kLengthMismatch,
  kDomainViolation,
  kEmptyTargets,
  kUnknownBackend,
  kNonpositiveLevel,
  kInvalidArgument,
  kNotAnAlgebra,
  kUnsupportedForSubalgebra,
  kInfeasibleCoset,
  kGridTooCoarse,
  kEigensolveFailure,
  kBracketFailure,
  kTailBoundFailure,
  kSolverStall,
  kSearchStall,
  kCertificateRejected,
};

[[nodiscard]] std::string_view to_string(ErrorCode code) noexcept;

/// True for errors caused by the input itself rather than by a solver that
/// failed to converge. The CLI maps the two groups to different exit codes.
[[nodiscard]] bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace picknorm
