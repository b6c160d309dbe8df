#include <iostream>

#include "poincare/cli.hpp"

int main(int argc, char** argv) { return poincare::cli::run(argc, argv, std::cout, std::cerr); }
