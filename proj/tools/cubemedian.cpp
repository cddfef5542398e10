#include <iostream>
#include <string>
#include <vector>

#include "cubemedian/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cubemedian::run(args, std::cout, std::cerr);
}
