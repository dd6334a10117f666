#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fockcb {

// Runs the command line front end. `args` excludes the program name.
// Results go to `out` (or the file given with -o), diagnostics to `err`.
// Returns the process exit status: 0 iff no error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fockcb
