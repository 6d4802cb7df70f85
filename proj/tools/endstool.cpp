#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
  return endstool::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
