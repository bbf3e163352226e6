#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace szm::cli {

inline constexpr char const* schema_version = "sz-moebius/1";

/// Runs the command line (without the program name). Returns the exit code:
/// 0 on success, 1 if a verification fails or a computation raises an
/// error, 2 on usage errors.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace szm::cli
