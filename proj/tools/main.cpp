#include <unistd.h>

#include <iostream>
#include <string>
#include <vector>

#include "rangematch/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return rangematch::cli::run(args, {std::cout, std::cerr, ::isatty(STDOUT_FILENO) != 0});
}
