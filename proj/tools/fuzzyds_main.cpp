#include <iostream>
#include <string>
#include <vector>

#include "fuzzyds/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fuzzyds::cli::run(args, std::cout, std::cerr);
}
