#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace u5 {

/// Command dispatcher behind the binary. Exit codes: 0 for data verdicts,
/// 1 for verification failures, 2 for input errors, 3 for contract refusals.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace u5
