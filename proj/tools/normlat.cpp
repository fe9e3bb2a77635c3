#include <iostream>

#include "normlat/cli.hpp"

int main(int argc, char** argv) {
  return normlat::cli::run(argc, argv, std::cout, std::cerr);
}
