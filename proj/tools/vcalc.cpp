#include <iostream>

#include "vcalc/cli/cli.hpp"

int main(int argc, char** argv) {
  return vcalc::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
