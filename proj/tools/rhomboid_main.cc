#include <iostream>
#include <string>
#include <vector>

#include "rhomboid/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rhomboid::cli::Run(args, std::cout, std::cerr);
}
