#include <iostream>

#include "diskslep/cli.hpp"

int main(int argc, char** argv) { return diskslep::cli::run_cli(argc, argv, std::cout, std::cerr); }
