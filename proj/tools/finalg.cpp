#include <iostream>
#include <string>
#include <vector>

#include "finalg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return finalg::cli::run(args, std::cout, std::cerr);
}
