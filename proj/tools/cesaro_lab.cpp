#include <iostream>

#include "cesaro/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cesaro::run_cli(args, std::cout, std::cerr);
}
