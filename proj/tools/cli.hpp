#pragma once

#include <iosfwd>

namespace multidfa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitData = 2;

/// Entry point of the `multidfa` command line tool, writing to the given
/// streams instead of the process ones.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multidfa::cli
