#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclo::cli {

// Runs one CLI invocation. Data goes to out, diagnostics to err.
// Exit codes: 0 success, 1 usage or expression parse error, 2 validation
// error in input data, 3 reserved for `verify --strict` with mismatches.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclo::cli
