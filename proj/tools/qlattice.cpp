#include "qlattice/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return qlattice::cli::run_cli(argc, argv, std::cout, std::cerr); }
