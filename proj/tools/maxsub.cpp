#include <iostream>

#include "maxsub/cli.hpp"

int main(int argc, char** argv) {
  return maxsub::cli::run(argc, argv, std::cin, std::cout, std::cerr);
}
