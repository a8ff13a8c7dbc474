#include <iostream>
#include <string>
#include <vector>

#include "ehlab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return ehlab::cli::run(args, std::cout, std::cerr);
}
