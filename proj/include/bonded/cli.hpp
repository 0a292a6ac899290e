#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure (or
// no certificate found), 2 usage or parse error.

#include <ostream>
#include <string>
#include <vector>

namespace bonded::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses `4` or `2..5` into an inclusive range. Throws bonded::Error.
std::pair<int, int> parse_strand_range(const std::string& text);

}  // namespace bonded::cli
