#include <iostream>

#include "extrilen/cli.hpp"

int main(int argc, char** argv) { return extrilen::cli_main(argc, argv, std::cout, std::cerr); }
