#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pqf/core/error.hpp"

namespace pqf {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitInvariant = 4;
inline constexpr int kExitAlgorithm = 5;
inline constexpr int kExitSizeCap = 6;

int exit_code_for(ErrorKind kind);

// args excludes the program name. On success exactly one document is written
// to out; diagnostics go to err. A path of "-" reads from in.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pqf
