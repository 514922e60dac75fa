#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homlie {

/// Runs one command line (without the program name). Returns the exit code:
/// 0 when every report is PASS or INFO, 1 on FAIL or DISCREPANT, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homlie
