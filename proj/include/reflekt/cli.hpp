#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reflekt::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 law failure, unmet --expect or an undecided construction, 2 usage or
/// input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reflekt::cli
