#include <iostream>
#include <string>
#include <vector>

#include "revlab/cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return revlab::cli::dispatch(args, std::cout, std::cerr);
}
