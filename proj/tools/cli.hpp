#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aradon::cli {

/// Runs the aradon command line. `args` includes the program name.
/// Returns the process exit status; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a,b,c" or "start:step:stop" (stop exclusive) into degrees.
std::vector<double> parse_angle_list(const std::string& text);

}  // namespace aradon::cli
