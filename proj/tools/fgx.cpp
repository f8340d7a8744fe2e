#include <iostream>

#include "fgx/cli.hpp"

int main(int argc, char** argv) { return fgx::cli::run(argc, argv, std::cout, std::cerr); }
