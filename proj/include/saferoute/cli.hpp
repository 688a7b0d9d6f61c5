#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace saferoute {

/// Entry point of the `saferoute` tool; args exclude the program name.
/// Exit codes: 0 success, 1 data or processing error, 2 usage or I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace saferoute
