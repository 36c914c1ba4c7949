#include <iostream>

#include "hyperdox/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hyperdox::cli::run(args, std::cout, std::cerr);
}
