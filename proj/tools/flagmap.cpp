#include <iostream>

#include "flagmap/cli.hpp"

int main(int argc, char** argv) { return flagmap::run_cli(argc, argv, std::cout, std::cerr); }
