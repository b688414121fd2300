#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permclass {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

/// Largest series order accepted by `permclass series`.
inline constexpr int kMaxSeriesOrder = 30;

/// Entry point of the `permclass` tool: subcommands member, map, series,
/// enumerate and verify. `args` excludes the program name. Results go to
/// `out`, diagnostics to `err`; `in` supplies a value when one is omitted or
/// given as "-".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            std::istream& in);

}  // namespace permclass
