#include <iostream>
#include <string>
#include <vector>

#include "platekit_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return platekit::cli::run(args, std::cout, std::cerr);
}
