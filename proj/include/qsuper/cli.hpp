#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qsuper::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_identity_failure = 1;
inline constexpr int exit_config_error = 2;

inline constexpr unsigned max_depth = 12;

/// Entry point behind the `qsuper` binary. `args` excludes the program name.
/// Output goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qsuper::cli
