#include <iostream>

#include "stick/cli.hpp"

int main(int argc, char** argv) {
  return stick::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
