#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nervemorse {

// Full command-line front end. `args` excludes the program name. JSON results
// go to `out`, human-readable messages to `err`.
//
// Exit codes: 0 success (decompose: verified match), 2 unreadable or invalid
// input, 3 hypothesis violation without --force, 4 decomposition total differs
// from directly computed homology, 5 invalid matching in check-matching.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nervemorse
