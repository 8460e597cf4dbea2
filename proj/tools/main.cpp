#include "commands.hpp"

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

int main(int argc, char** argv) {
  const char* no_color = std::getenv("COMPOGRAPH_NO_COLOR");
  const bool color = isatty(STDOUT_FILENO) != 0 && !(no_color && std::string(no_color) == "1");
  std::vector<std::string> args(argv, argv + argc);
  return compograph::cli::run(args, std::cout, std::cerr, color);
}
