#pragma once

#include <ostream>

namespace kz::cli {

// Exit codes: 0 all checks passed, 1 a check failed, 2 usage or domain error,
// 3 a numerical routine gave up (e.g. tolerance not reached).
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kEvalError = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kz::cli
