#include <iostream>

#include "ostrowski/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ostrowski::run_cli(args, std::cout, std::cerr);
}
