#include "cachewright/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cachewright::cli::run(argc, argv, std::cout, std::cerr); }
