#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chroma::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFalsified = 1;  // a mathematical claim did not hold
inline constexpr int kExitUsage = 2;      // bad arguments, malformed input, failed precondition

// Environment variable overriding the default comparison tolerance.
inline constexpr const char* kToleranceEnv = "CHROMA_TOL";

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chroma::cli
