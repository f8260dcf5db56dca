#include <iostream>

#include "keller/harness.hpp"

int main(int argc, char** argv) { return keller::cli::run(argc, argv, std::cout, std::cerr); }
