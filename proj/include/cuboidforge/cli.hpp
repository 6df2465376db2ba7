// Command-line front end. Exit codes:
//   0  success
//   1  usage error (unknown flags, malformed numbers, bad domain input)
//   2  overflow, verification failure, checkpoint mismatch, or I/O failure
//   3  a perfect cuboid was found
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuboidforge {

// args excludes the program name. out receives structured output and
// summaries, err receives diagnostics.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace cuboidforge
