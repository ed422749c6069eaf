// galedesign_cli.cpp -- process entry point; all behavior lives in run_cli.

#include <iostream>
#include <string>
#include <vector>

#include "galedesign/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gd::run_cli(args, std::cout, std::cerr);
}
