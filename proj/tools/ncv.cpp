#include <iostream>

#include "ncv/cli/run.hpp"

int main(int argc, char** argv) { return ncv::cli::run(argc, argv, std::cout, std::cerr); }
