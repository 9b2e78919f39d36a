#pragma once

// Command-line front end.  Subcommands: sdepth, depth, classify,
// check-theorem, search-ccondition, upgrade-partition.  Exit codes:
// 0 success (including honest refusals and vacuous verdicts),
// 1 usage/parse/validation/internal errors, 2 a quotient violating the
// depth conclusion.

#include <ostream>
#include <string>
#include <vector>

namespace sqfd {

inline constexpr const char* kToolVersion = "1.0.0";

/// Parses and runs one invocation; args excludes the program name.
/// Human-readable output goes to out, diagnostics to err; structured
/// records go to the path behind --out when given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sqfd
