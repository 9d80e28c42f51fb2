#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace revlab::cli {

/// Exit codes of dispatch().
inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand. `args` excludes the program name. The human summary
/// goes to `out`; diagnostics and usage text go to `err`. Machine outputs
/// are written under --out DIR together with manifest.json.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace revlab::cli
