#pragma once

#include <iosfwd>

namespace webs {

// Entry point of the `webs` tool. Subcommands: eval, map, invert, verify,
// render, tangency. JSON on `out`, JSON error objects on `err`.
// Exit status: 0 success (and all checks passed), 1 domain failure, 2 usage.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace webs
