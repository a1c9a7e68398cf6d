#pragma once

#include <ostream>

namespace qlab::cli {

// Exit codes.
inline constexpr int exit_pass = 0;
inline constexpr int exit_mismatch = 1;
inline constexpr int exit_usage = 2;

// Entry point of the qlab command; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qlab::cli
