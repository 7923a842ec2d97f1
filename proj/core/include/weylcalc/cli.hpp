#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weylcalc {

/// Command-line dispatch: parses the given arguments (program name excluded),
/// runs one subcommand and writes a single JSON document.
///
/// Exit codes: 0 success, 2 parse error, 3 resource-limit violation,
/// 4 oracle disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weylcalc
