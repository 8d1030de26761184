#include <iostream>
#include <string>
#include <vector>

#include "gsc/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return gsc::cli::run(args, std::cout);
}
