#include <iostream>

#include "clcc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return clcc::run_cli(args, std::cin, std::cout, std::cerr);
}
