#include <iostream>

#include "cli/commands.hpp"

int main(int argc, char** argv) {
  return burrcli::run_command(argc, argv, std::cout, std::cerr);
}
