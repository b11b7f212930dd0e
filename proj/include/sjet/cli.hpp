#pragma once

#include <string>
#include <vector>

namespace sjet::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification_failed = 1;
inline constexpr int exit_input_error = 2;

struct CommandResult {
    int exit_code = exit_ok;
    std::string out; // payload
    std::string err; // diagnostics
};

/// Runs one command. `args` excludes the program name. Diagnostics are
/// coloured when SJET_COLOR=1.
CommandResult run(const std::vector<std::string>& args);

} // namespace sjet::cli
