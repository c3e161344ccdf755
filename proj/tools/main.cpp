#include <iostream>

#include "pathalg/cli.hpp"

int main(int argc, char** argv) { return pathalg::run_cli(argc, argv, std::cout, std::cerr); }
