#include <iostream>
#include <string>
#include <vector>

#include "surfenum/app/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return surfenum::app::run_cli(args, std::cout, std::cerr);
}
