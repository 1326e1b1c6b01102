#pragma once

#include <iosfwd>

namespace picknorm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitStall = 3;

/// Entry point of the `picknorm` executable, with injectable streams so the
/// commands can be exercised in-process. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace picknorm::cli
