#include <iostream>

#include "ffq/cli/run.hpp"

int main(int argc, char** argv) { return ffq::cli::main_entry(argc, argv, std::cout, std::cerr); }
