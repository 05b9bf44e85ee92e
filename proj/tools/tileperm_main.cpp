#include <iostream>

#include "tileperm/cli.hpp"

int main(int argc, char** argv) {
  return tileperm::cli::run(argc, argv, std::cout, std::cerr);
}
