#pragma once

#include <string>
#include <vector>

namespace dismantle::cli {

/// Exit codes shared by every subcommand.
inline constexpr int exit_holds = 0;
inline constexpr int exit_fails = 1;
inline constexpr int exit_usage = 2;

/// Parses argv, runs one subcommand and writes its JSON report to stdout.
int run(int argc, char** argv);

/// Lowercase hex SHA-256 of the concatenated contents, in order.
std::string sha256_hex(const std::vector<std::string>& chunks);

} // namespace dismantle::cli
