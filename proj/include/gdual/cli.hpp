#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gdual {

// Dispatches one CLI invocation (args exclude the program name) and returns
// the process exit code: 0 success, 1 property failure, 2 usage/parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gdual
