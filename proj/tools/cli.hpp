#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gtsp::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kOutside = 1;      // outside the set / metric violation / failed check
inline constexpr int kNotEulerian = 2;  // decompose on a graph outside P_n's generators
inline constexpr int kUsage = 64;
inline constexpr int kFileError = 66;

// Runs one command line (args excludes the program name). Certificates and
// summaries go to out, diagnostics to err.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtsp::cli
