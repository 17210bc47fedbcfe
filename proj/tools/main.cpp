#include <iostream>
#include <string>
#include <vector>

#include "treeplace/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return treeplace::run_cli(args, std::cin, std::cout, std::cerr);
}
