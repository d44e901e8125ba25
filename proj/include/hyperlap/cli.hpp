#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperlap {

// Runs one CLI invocation; args excludes the program name. Returns the
// process exit code: 0 success (including --help), 1 when the verify
// subcommand found a failing check, 2 on usage or input errors.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

} // namespace hyperlap
