#include <iostream>
#include <string>
#include <vector>

#include "atk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return atk::cli::run(args, std::cout, std::cerr);
}
