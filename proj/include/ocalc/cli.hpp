#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocalc {

/// Runs one command line (without the program name). Reports go to `out`
/// as JSON lines followed by a "# ..." summary line; diagnostics go to `err`.
/// Returns 0 on success, 1 on a failed verification, 2 on a usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ocalc
