#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccalc::cli {

/// Full command-line front end, stream-parameterized so tests can capture
/// output.  args excludes the program name.  Exit codes: 0 success, 1
/// domain or input error, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ccalc::cli
