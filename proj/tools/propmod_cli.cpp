#include <iostream>
#include <string>
#include <vector>

#include "propmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto result = propmod::cli::execute(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.status;
}
