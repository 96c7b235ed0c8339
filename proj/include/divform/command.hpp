#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace divform {

// CLI entry point, separated from main() so tests can drive it directly.
// Exit codes: 0 success / verified, 1 verification failure, 2 usage or
// parse error.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

} // namespace divform
