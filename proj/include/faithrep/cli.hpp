#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace faithrep::cli {

/// Runs the command line `args` (without the program name).
/// Exit codes: 0 success, 1 mismatch or failed check, 2 usage or parse error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faithrep::cli
