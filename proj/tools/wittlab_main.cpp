#include <iostream>

#include "wittlab/cli.hpp"

int main(int argc, char** argv) { return wittlab::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
