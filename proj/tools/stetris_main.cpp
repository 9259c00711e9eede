#include "spectral_tetris/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return stetris::cli_main(argc, argv, std::cout, std::cerr); }
