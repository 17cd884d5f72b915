#include <iostream>
#include <string>
#include <vector>

#include "cyclemap/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return cyclemap::run_cli(args, std::cout, std::cerr);
}
