#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhj::cli {

/// Dispatches one subcommand with its arguments (no program name). Audit
/// documents and construction summaries go to `out`, diagnostics to `err`;
/// result manifests are written to the path given by --output. Returns the
/// process exit code: 0 when all requested checks pass, 1 when a check
/// reports violations, the error-specific code otherwise.
int run_subcommand(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

int run_main(int argc, const char* const* argv);

} // namespace bhj::cli
