#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dtopo::cli {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
  kOk = 0,
  kNegative = 1,   // non-contractible / failed verification
  kUndecided = 2,  // oracle budget exhausted somewhere
  kBadInput = 3,   // usage or parse error
};

/// Runs one command line. args excludes the program name. Reads "-" or a
/// missing --input from `in`; JSON results go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dtopo::cli
