#include <iostream>

#include "clfi/cli.hpp"

int main(int argc, char** argv) { return clfi::cli::run(argc, argv, std::cout, std::cerr); }
