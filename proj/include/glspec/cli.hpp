#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace glspec {

// Runs the command line given as arguments (program name excluded).
// Exit code 0 on success or verified match, 1 on a violation or
// mismatch, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace glspec
