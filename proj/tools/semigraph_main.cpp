#include <iostream>

#include "semigraph/cli.hpp"

int main(int argc, char** argv) {
  return semigraph::run_cli(argc, argv, std::cin, std::cout, std::cerr);
}
