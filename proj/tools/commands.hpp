#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "posetflow/network.hpp"
#include "posetflow/poset.hpp"

namespace posetflow::cli {

// Poset specifiers:
//   boolean:n  symmetric:n  partition:n  chain:m  chain:w1,w2,...  claw:m  file:path
// joined into products by " x ", e.g. "claw:1 x claw:2 x claw:3".
GradedPoset parse_poset_spec(const std::string& spec);

// "hasse(<poset spec>)", "file:path" or a bare path to network JSON.
Network parse_network_spec(const std::string& spec);

// Runs the command line (args excludes the program name). Returns the exit
// status: 0 success, 2 negative verdict, 1 error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace posetflow::cli
