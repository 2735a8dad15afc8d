#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace genus {

/// Runs one CLI invocation (args exclude the program name).
/// Exit codes: 0 ok, 1 usage, 2 validation/data, 3 numerical failure.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace genus
