// cli.hpp -- the command line driver, separated from main() so tests can
// run it in-process and capture its streams.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gd {

// Runs one command. args is argv[1..] in natural order. Returns the process
// exit code: 0 success / verification pass, 1 verification fail, 2 input
// error, 3 budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gd
