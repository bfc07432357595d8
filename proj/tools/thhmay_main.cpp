#include <iostream>

#include "thhmay/cli.hpp"

int main(int argc, char** argv) {
  return thhmay::cli::main_entry(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
