#include "gpc/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return gpc::cli::run(argc, argv, std::cout, std::cerr); }
