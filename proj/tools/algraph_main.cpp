#include <iostream>

#include "algraph/cli.hpp"

int main(int argc, char** argv) { return algraph::cli::main(argc, argv, std::cout, std::cerr); }
