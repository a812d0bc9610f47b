#include <iostream>
#include <string>
#include <vector>

#include "affcurve/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return affcurve::run(args, std::cout, std::cerr);
}
