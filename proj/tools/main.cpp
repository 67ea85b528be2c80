#include <iostream>
#include <string>
#include <vector>

#include "descent_poset/cli.hpp"

int main(int argc, char** argv) {
  return descent_poset::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
