#pragma once

// Command-line front end. `run` is the whole program minus process setup so
// tests can drive it with in-memory streams.
//
// Exit status: 0 success, 1 verification or assignment failure, 2 usage
// error (unknown flag, malformed number, rejected input).

#include <iosfwd>
#include <string>
#include <vector>

namespace speedrobust::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace speedrobust::cli
