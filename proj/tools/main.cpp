#include <iostream>

#include "cli_main.hpp"

int main(int argc, char** argv) {
  return graphon_cpd::cli::cli_main(argc, argv, std::cout, std::cerr);
}
