#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ftsent {

/// Full CLI entry point, stream-injectable for tests. Returns the process
/// exit code (0 ok, 1 I/O or parse error, 2 tolerance ambiguity, 3 internal
/// consistency failure).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ftsent
