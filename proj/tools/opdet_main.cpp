#include <iostream>

#include "opdet/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return opdet::cli::dispatch(args, std::cout, std::cerr);
}
