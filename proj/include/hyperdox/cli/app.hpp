#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperdox::cli {

/// Runs one command line (without the program name). Returns the exit
/// status: 0 success or true, 1 false / countermodel / violation / rejected
/// proof, 2 input error. Errors are written to `err` as a JSON object.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperdox::cli
