#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schur_scope::cli {

/// Exit codes: 0 definitive answer, 1 usage or validation error, 2 the result
/// contains Unknown, a bounded negative, or a truncated search.
enum ExitCode : int { kOk = 0, kUsage = 1, kUndecided = 2 };

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schur_scope::cli
