#include <iostream>

#include "autsg/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return autsg::run_cli(args, std::cout, std::cerr);
}
