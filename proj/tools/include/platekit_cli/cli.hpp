#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace platekit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitIo = 4;

/// Runs one subcommand. `args` excludes the program name. Data goes to `out`
/// unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace platekit::cli
