#include <iostream>

#include "zres_cli/commands.hpp"

int main(int argc, char** argv) { return zres::cli::run_cli(argc, argv, std::cout, std::cerr); }
