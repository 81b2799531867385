#include <iostream>
#include <vector>

#include "invop/cli.hh"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return invop::run_cli(args, std::cout, std::cerr);
}
