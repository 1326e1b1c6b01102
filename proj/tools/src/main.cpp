#include <iostream>

#include "picknorm_cli/commands.hpp"

int main(int argc, char** argv) {
  return picknorm::cli::run_cli(argc, argv, std::cout, std::cerr);
}
