#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ricci::cli {

// Exit-status contract shared by the binary and the tests.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitCrossCheck = 3;

// Runs the full command line (without argv[0]) against the given streams.
// Never throws; failures are mapped onto the exit-status contract.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ricci::cli
