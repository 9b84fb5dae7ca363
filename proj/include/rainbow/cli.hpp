#pragma once

namespace rainbow::cli {

// Exit codes: 0 pass, 1 property violated, 2 input/build error, 3 budget exceeded.
inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;
inline constexpr int kExitBudget = 3;

int run(int argc, const char* const* argv);

}  // namespace rainbow::cli
