#include <iostream>

#include "qbounds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return qbounds::run_cli(args, std::cout, std::cerr);
}
