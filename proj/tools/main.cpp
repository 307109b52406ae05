#include <iostream>

#include "semimono/cli.hpp"

int main(int argc, char** argv) {
  return semimono::run_cli(argc, argv, std::cout, std::cerr);
}
