#include <iostream>

#include "recip/cli.hpp"

int main(int argc, char** argv) { return recip::cli::run_cli(argc, argv, std::cout, std::cerr); }
