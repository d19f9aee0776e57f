#include <iostream>

#include "gso_cli/cli.hpp"

int main(int argc, char** argv) { return gso::cli::run_cli(argc, argv, std::cout, std::cerr); }
