#include <iostream>
#include <string>
#include <vector>

#include "qops/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return qops::run(std::move(args), std::cout, std::cerr);
}
