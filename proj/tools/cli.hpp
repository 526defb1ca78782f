#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nashkit::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kFailedPaths = 2, kUnsupported = 3 };

// args excludes the program name. stdin is read when --game is "-".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nashkit::cli
