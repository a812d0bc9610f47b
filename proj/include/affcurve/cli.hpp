#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "affcurve/serialize.hpp"

namespace affcurve {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitFail = 2, kExitResource = 3 };

/// Runs one subcommand (gamma, zd, oracle, graph, check). args excludes the
/// program name. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, also returning the report that --json would print.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, RunReport& report);

std::string to_dot(const MomentGraphSlice& slice);

}  // namespace affcurve
