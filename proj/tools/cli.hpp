#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nedindex::cli {

/// Exit codes: 0 success, 1 usage error, 2 input parse error,
/// 3 internal invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nedindex::cli
