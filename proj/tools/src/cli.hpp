#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropexp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitGenericity = 4;
inline constexpr int kExitInternal = 1;

/// Runs one job. `args` excludes the program name. The output document (or a
/// structured error object) goes to `out`; help text goes to `out` too.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tropexp::cli
