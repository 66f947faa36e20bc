#include <iostream>

#include "osc/cli.hpp"

int main(int argc, char** argv) { return osc::cli::main(argc, argv, std::cout, std::cerr); }
