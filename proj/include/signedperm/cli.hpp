#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace signedperm {

/// Runs the command-line front end.  `args` excludes the program name.
/// Returns a process exit code: 0 on success, 1 when a verification command
/// finds a counterexample, 2 on usage errors or resource-limit overruns.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace signedperm
