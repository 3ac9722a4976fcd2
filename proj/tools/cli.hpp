#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace josephus::cli {

// Exit codes shared by every subcommand.
inline constexpr int kOk = 0;
inline constexpr int kDomainFailure = 1;
inline constexpr int kUsage = 2;

// Runs one command line (args excludes the program name). Results go to
// `out` unless an output file is requested; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace josephus::cli
