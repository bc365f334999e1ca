#include <iostream>

#include "mindist/cli.hpp"

int main(int argc, char** argv) { return mindist::run_cli(argc, argv, std::cout, std::cerr); }
