#include <iostream>
#include <string>
#include <vector>

#include "parhyp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return parhyp::run_command(args, std::cout, std::cerr);
}
