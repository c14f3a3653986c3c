#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bcov/json_io.hpp"

namespace bcov::cli {

/// Runs one command (args exclude the program name). Exit codes: 0 success,
/// 1 unexpected failure, 2 invalid input, 3 capacity limit.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// ["pcon", "--s", "1", "--uniform"] <-> {"command": "pcon", "s": "1", "uniform": true}
Json args_to_spec(const std::vector<std::string>& args);
std::vector<std::string> spec_to_args(const Json& spec);

}  // namespace bcov::cli
