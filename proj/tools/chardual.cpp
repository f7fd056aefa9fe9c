#include <iostream>
#include <string>
#include <vector>

#include "chardual/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return chardual::run(args, std::cout, std::cerr);
}
