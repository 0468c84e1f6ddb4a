#include <iostream>
#include <string>
#include <vector>

#include "pweave/workflow.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return pweave::run_cli(args, std::cout, std::cerr);
}
