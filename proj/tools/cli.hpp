#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace permpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs one command line. args[0] is the program name. Results go to `out`;
/// domain errors are written to `err` as {"schema":1,"error":CODE,"message":...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permpoly::cli
