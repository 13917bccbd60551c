#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvecount::cli {

/// Runs one command line (arguments without the program name).
/// Exit codes: 0 success, 1 domain/window/integrality error or a failed
/// check, 2 malformed arguments or input files.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curvecount::cli
