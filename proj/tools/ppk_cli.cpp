#include <iostream>
#include <string>
#include <vector>

#include "ppk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ppk::run_cli(args, std::cout, std::cerr);
}
