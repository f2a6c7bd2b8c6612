#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace beliefnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

inline constexpr const char* kWorkspaceEnv = "BELIEFNET_WORKSPACE";

/// Parses arguments (without the program name) and runs one command.
/// Returns 0 on success, 1 on a usage error, 2 on a data or model error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace beliefnet::cli
