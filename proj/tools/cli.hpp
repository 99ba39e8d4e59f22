#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polyad {

// Exit codes: 0 success, 1 verification failure, 2 input error (including BudgetExceeded).
// args excludes the program name. Process limits are restored before returning.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace polyad
