#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trainyard::cli {

/// Runs the command line `args` (without the program name).
/// Returns 0 on success, 1 for a domain error, 2 for a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trainyard::cli
