#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subsums {

/// Runs one CLI command. Returns the exit status: 0 on success, 2 on a
/// parse/domain error, 3 on a guard violation. Reports go to `out`,
/// diagnostics to `err`. Kept separate from main() so tests can drive it
/// in-process.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subsums
