#include <iostream>
#include <string>
#include <vector>

#include "coneseries/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return coneseries::dispatch(args, std::cout, std::cerr);
}
