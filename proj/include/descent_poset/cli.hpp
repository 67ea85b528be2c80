#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace descent_poset {

// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitVerification = 3;

// Runs the tool with argv-style arguments (args[0] is the program name).
// Normal output goes to `out` unless --out names a file; diagnostics go to
// `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace descent_poset
