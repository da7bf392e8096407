#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowscat::cli {

// Runs the command-line tool on the given arguments (without argv[0]).
// Results go to `out`, machine-readable error JSON to `err`.
// Exit codes: 0 ok, 2 configuration error, 3 numerical error, 4 I/O error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lowscat::cli
