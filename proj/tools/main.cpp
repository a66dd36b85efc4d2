#include "hyperdet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return hdet::run_cli(argc, argv, std::cout, std::cerr); }
