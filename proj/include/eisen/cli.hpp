#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eisen {

/// Parses and runs one CLI invocation (without the program name).
/// Exit codes: 0 success, 1 computation-level inconsistency, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace eisen
