#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hkquot/k3_involutions.hpp"

namespace hkq {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitDomain = 2,
  kExitVerification = 3,
};

/// Runs one command. `args` excludes the program name. Output is written
/// only once the command has fully succeeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Same, with `verify` checking against the given tabulated Y_S data.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::vector<YsTableRow>& reference);

/// Parses the csv emitted by `appendix --format csv`. Throws
/// std::invalid_argument on a malformed header or row.
std::vector<YsTableRow> parse_appendix_csv(std::string_view text);

}  // namespace hkq
