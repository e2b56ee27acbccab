#include <iostream>

#include "buergi/cli.hpp"

int main(int argc, char** argv) {
  return buergi::cli::main_entry(argc, argv, std::cout, std::cerr);
}
