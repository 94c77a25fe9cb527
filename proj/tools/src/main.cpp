#include <iostream>

#include "latmed_cli/cli.hpp"

int main(int argc, char** argv) { return latmed::cli::run(argc, argv, std::cout, std::cerr); }
