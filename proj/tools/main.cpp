#include <iostream>

#include "quiverq/cli.hpp"

int main(int argc, char** argv) { return quiverq::cli_main(argc, argv, std::cout, std::cerr); }
