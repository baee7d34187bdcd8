#pragma once

// Command-line surface: `table`, `verify`, `asymptotics` subcommands with
// csv/json/text output.  Exposed as a library function so tests can drive
// it in-process; the binary in tools/ is a thin wrapper.
//
// Exit codes: 0 success, 1 verification failure or runtime error,
// 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace toruscount::cli {

inline constexpr const char* kVersion = "0.1.0";

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toruscount::cli
