#include <iostream>
#include <vector>

#include "lieob/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return lieob::cli::run(args, std::cout, std::cerr);
}
