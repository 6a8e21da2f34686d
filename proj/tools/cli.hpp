#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tropical::cli {

/// Runs the tropc command line with args (program name excluded).
/// Returns 0 on success, 1 on a domain error, 2 on a syntax or usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tropical::cli
