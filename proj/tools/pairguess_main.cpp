#include <iostream>
#include <string>
#include <vector>

#include "pairguess/cli.hpp"

int main(int argc, char** argv) {
  return pairguess::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout,
                            std::cerr);
}
