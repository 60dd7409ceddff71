#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphtensor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

/// Runs one subcommand. args excludes the program name. Graph input is read
/// from the named file, or from `in` when the path is "-".
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace graphtensor::cli
