#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hooklab::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerifiedFalse = 1;
inline constexpr int kBadInput = 2;
inline constexpr int kGuardRefusal = 3;
inline constexpr int kInternalError = 4;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  /// Value of HOOKLAB_GUARD, or nullptr when unset.
  const char* guard_env = nullptr;
};

/// Runs one command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, Streams streams);

}  // namespace hooklab::cli
