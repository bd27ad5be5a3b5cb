#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tnn::cli {

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

/// Runs the `tnn` command line (args exclude the program name). Output goes to
/// `out`, diagnostics to `err`. Never throws; input problems map to exit 2.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tnn::cli
