#include <iostream>

#include "srips/cli.hpp"

int main(int argc, char** argv) { return srips::cli::run(argc, argv, std::cout, std::cerr); }
