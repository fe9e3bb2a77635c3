#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normlat::cli {

// Full command-line front end. Returns the process exit code:
//   0 success, 2 argument/parse errors, 3 computation errors,
//   4 cross-check (--verify) mismatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Convenience for tests: args without the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normlat::cli
