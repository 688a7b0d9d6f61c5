#include <iostream>
#include <string>
#include <vector>

#include "saferoute/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return saferoute::run_cli(args, std::cout, std::cerr);
}
