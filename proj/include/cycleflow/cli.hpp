#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cycleflow::cli {

// Runs one invocation given argv-style arguments without the program name.
// Exit codes: 0 = witness found / clean pass, 1 = violation found or a
// verification failure, 2 = usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cycleflow::cli
