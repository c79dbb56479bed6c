#include <iostream>
#include <string>
#include <vector>

#include "softhandoff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return softhandoff::cli::run(args, std::cout, std::cerr);
}
