#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diagdef::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  ///< a verification in the report failed
inline constexpr int kExitInput = 2;   ///< usage or input error, reported on err

/// Runs one subcommand. args excludes the program name. The report goes to
/// out as text, or as JSON with --json; both carry the same fields.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace diagdef::cli
