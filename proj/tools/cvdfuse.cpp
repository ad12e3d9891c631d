#include <iostream>
#include <string>
#include <vector>

#include "cvdfusion/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return cvdfusion::cli::run_command(args, std::cin, std::cout, std::cerr);
}
