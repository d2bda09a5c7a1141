#include <iostream>

#include "hyperred/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperred::cli::main_entry(args, std::cin, std::cout, std::cerr);
}
