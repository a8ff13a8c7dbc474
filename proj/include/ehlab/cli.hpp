#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ehlab::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportVersion = 1;

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFound = 1;  // copy found / inequality violated
inline constexpr int kExitUsage = 2;  // usage, parse or domain error
inline constexpr int kExitCap = 3;    // instance exceeds a configured cap

// Entry point of the `ehlab` binary. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ehlab::cli
