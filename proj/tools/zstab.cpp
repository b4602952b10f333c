#include <iostream>

#include "zstab/cli.hpp"

int main(int argc, char** argv) {
  return zstab::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
