#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logcorners {

/// Runs one command line (without the program name). Writes the JSON result
/// to `out`, diagnostics to `err`, and returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logcorners
