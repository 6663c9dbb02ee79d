#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  auto [code, text] = pk::cli::run(args);
  (code == 2 ? std::cerr : std::cout) << text;
  return code;
}
