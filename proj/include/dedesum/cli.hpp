#ifndef DEDESUM_CLI_HPP
#define DEDESUM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dedesum::cli {

inline constexpr const char* kVersion = "dedesum 0.1.0";

// Runs the CLI on the given arguments (without the program name).
// Exit codes: 0 success, 1 domain/usage error, 2 internal inconsistency
// (oracle disagreement, failed exactness assertion, property violation).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dedesum::cli

#endif
