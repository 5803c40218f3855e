#include <iostream>

#include "hyperbfs/cli.hpp"

int main(int argc, char** argv) {
  return hyperbfs::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
