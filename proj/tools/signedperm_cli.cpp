#include <iostream>
#include <string>
#include <vector>

#include "signedperm/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return signedperm::run_cli(args, std::cout, std::cerr);
}
