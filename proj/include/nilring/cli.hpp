#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nilring {

/// Command-line driver. `args` excludes the program name. Writes reports to
/// `out` and diagnostics to `err`. Exit codes:
///   0  success (for hunt: witness found)
///   1  a claim check was refuted (for hunt: no witness found)
///   2  usage, parse, or construction errors
///   3  a configured cap was exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace nilring
