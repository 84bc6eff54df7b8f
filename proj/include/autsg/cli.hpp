#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace autsg {

/// Runs the command line `args` (without the program name). Returns the exit
/// code: 0 success (or equal for eq), 1 a negative answer, 2 any input defect.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autsg
