#include <iostream>
#include <string>
#include <vector>

#include "pfm_cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return pfm::cli::run(args, std::cin, std::cout, std::cerr);
}
