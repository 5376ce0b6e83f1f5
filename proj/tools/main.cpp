#include <iostream>
#include <string>
#include <vector>

#include "infothermo/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return infothermo::cli::run(args, std::cout, std::cerr);
}
