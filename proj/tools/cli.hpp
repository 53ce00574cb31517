#pragma once

#include <iosfwd>

namespace dlpeval::cli {

/// Exit codes: 0 success, 1 evaluation-policy failure, 2 input or
/// configuration error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitPolicy = 1;
inline constexpr int kExitInput = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dlpeval::cli
