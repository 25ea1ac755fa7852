#include <iostream>

#include "malg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return malg::cli::run(args, std::cout, std::cerr);
}
