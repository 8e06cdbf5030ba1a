#pragma once

// Command-line front end. Data records go to `out`, everything else to `err`.

#include <ostream>

namespace betawalk::cli {

enum ExitCode : int { kOk = 0, kViolated = 1, kUsage = 2, kStatistical = 3 };

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace betawalk::cli
