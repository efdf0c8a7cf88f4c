#include <iostream>

#include "meixner/cli.hpp"

int main(int argc, char** argv) { return meixner::cli::main_with_args(argc, argv, std::cout, std::cerr); }
