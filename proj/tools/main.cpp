#include <iostream>

#include "crossint/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return crossint::run_cli(args, std::cout, std::cerr);
}
