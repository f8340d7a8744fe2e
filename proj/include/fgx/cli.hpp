#pragma once

#include <iosfwd>

namespace fgx::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kData = 3 };

// Entry point shared by the fgx executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fgx::cli
