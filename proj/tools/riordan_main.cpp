#include <iostream>
#include <vector>

#include "riordan/cli.hpp"

int main(int argc, char** argv) {
  return riordan::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
