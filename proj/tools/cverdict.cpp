#include <iostream>

#include "cverdict/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cverdict::run_cli(args, std::cout, std::cerr);
}
