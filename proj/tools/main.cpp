#include <iostream>
#include <string>
#include <vector>

#include "hamloc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hamloc::run_cli(args, std::cin, std::cout, std::cerr);
}
