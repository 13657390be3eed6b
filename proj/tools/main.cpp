#include <iostream>

#include "hypersimp/cli.hpp"

int main(int argc, char** argv) { return hypersimp::run_cli(argc, argv, std::cout, std::cerr); }
