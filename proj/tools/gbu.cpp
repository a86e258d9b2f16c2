#include <iostream>
#include <string>
#include <vector>

#include "gbu/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gbu::cli::run(args, std::cout, std::cerr);
}
