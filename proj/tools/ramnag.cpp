#include <iostream>

#include "ramnag/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ramnag::cli::dispatch(args, std::cout, std::cerr);
}
