#include <iostream>
#include <string>
#include <vector>

#include "cyclefam/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return cyclefam::cli::run(args, std::cout, std::cerr);
}
