#include <iostream>
#include <string>
#include <vector>

#include "sgw/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return sgw::cli::run(args, std::cout, std::cerr);
}
