#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palintiple {

// Dispatches one command line (without the program name) and writes all output
// to the given streams. Returns the process exit code: 0 success, 1 a
// verification or derivation that came back negative, 2 usage errors.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace palintiple
