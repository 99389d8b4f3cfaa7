#include <iostream>
#include <string>
#include <vector>

#include "ccalc/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ccalc::cli::run_cli(std::move(args), std::cout, std::cerr);
}
