#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gvm::cli {

inline constexpr int exit_usage = 64;
inline constexpr int exit_data = 65;
inline constexpr int exit_resource = 66;

/// Runs one command line. args[0] is the program name. Reports go to out,
/// diagnostics to err; the return value is the process exit status.
auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;

}
