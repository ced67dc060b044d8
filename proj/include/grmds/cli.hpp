#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grmds {

/// Runs the command-line front end on `args` (without the program name).
/// Exit codes: 0 success / MDS, 2 non-MDS verdict, 1 error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grmds
