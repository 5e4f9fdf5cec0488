#include <iostream>

#include "grlab/cli.hpp"

int main(int argc, char** argv) { return grlab::run_cli(argc, argv, std::cout, std::cerr); }
