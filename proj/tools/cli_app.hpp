#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcdm::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kDataError = 1;
inline constexpr int kConfigError = 2;
inline constexpr int kReplicationDrift = 3;

// Runs one command line (args exclude the program name). Normal output goes to
// `out` unless --output redirects it; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcdm::cli
