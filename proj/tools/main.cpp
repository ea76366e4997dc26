#include <iostream>
#include <string>
#include <vector>

#include "grundy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return grundy::run_cli(args, std::cout, std::cerr);
}
