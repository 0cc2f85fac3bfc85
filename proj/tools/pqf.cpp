#include <iostream>
#include <string>
#include <vector>

#include "pqf/cli/run.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pqf::run_cli(args, std::cin, std::cout, std::cerr);
}
