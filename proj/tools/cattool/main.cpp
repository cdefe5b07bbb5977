#include <iostream>
#include <string>
#include <vector>

#include "cattool_cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cattool::cli::run(args, std::cout, std::cerr);
}
