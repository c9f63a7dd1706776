#include <iostream>
#include <string>
#include <vector>

#include "knotconc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return knotconc::run_cli(args, std::cout, std::cerr);
}
