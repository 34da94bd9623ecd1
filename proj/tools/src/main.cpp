#include <iostream>

#include "invstar_cli/cli.hpp"

int main(int argc, char** argv) { return invstar::cli::run(argc, argv, std::cout, std::cerr); }
