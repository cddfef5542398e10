#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubemedian {

// Runs one subcommand (args excludes the program name). Reports go to out (or
// --out), diagnostics to err. Returns 0 on success, 1 on bad input or a domain
// error, 2 when a resource cap is exceeded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubemedian
