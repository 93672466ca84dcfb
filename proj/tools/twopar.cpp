#include <iostream>
#include <string>
#include <vector>

#include "twopar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return twopar::cli::run(args, std::cin, std::cout, std::cerr);
}
