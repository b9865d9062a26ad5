#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace resolvedim {

/// Runs the CLI on the given arguments (program name excluded).
/// Exit codes: 0 success or suite pass, 1 suite violation, 2 usage or
/// input error. Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace resolvedim
