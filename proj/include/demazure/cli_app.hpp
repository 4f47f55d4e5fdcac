#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace demazure {

// Runs the command-line surface on the given arguments (excluding argv[0]).
// Exit codes: 0 success, 2 usage/input error, 3 assertion failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace demazure
