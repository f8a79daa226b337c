#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace supersym {

// Runs one CLI command. Exit codes: 0 success, 1 parse/usage error,
// 2 domain error, 3 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace supersym
