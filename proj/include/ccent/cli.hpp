#pragma once

#include <string>
#include <vector>

namespace ccent {

// Full command-line front end. `args` excludes the program name. Returns the
// process exit code: 0 success, 1 I/O or computation failure, 2 usage error.
// All diagnostics go to stderr with an "error: " prefix.
int run_cli(const std::vector<std::string>& args);

}  // namespace ccent
