#include <iostream>
#include <string>
#include <vector>

#include "app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const int code = higgsmot::cli::run(args, std::cout, std::cerr);
  std::cout.flush();
  return code;
}
