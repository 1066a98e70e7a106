#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rangematch::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

struct Streams {
  std::ostream& out;
  std::ostream& err;
  /// Whether standard output is a terminal; selects the default --format.
  bool out_is_terminal = false;
};

/// Runs one command line (`args[0]` is the program name). Errors are written to
/// `err` as one JSON object per line: {"code", "message", "location"?}.
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace rangematch::cli
