#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gso::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kParseError = 2, kBudgetExhausted = 3 };

std::string version();

// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

// Runs one command line (argv[0] is the program name). The JSON report goes to out,
// diagnostics to err. Returns the exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gso::cli
