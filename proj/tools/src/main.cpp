#include <iostream>
#include <string>
#include <vector>

#include "nlk3cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nlk3cli::run(args, std::cout, std::cerr);
}
