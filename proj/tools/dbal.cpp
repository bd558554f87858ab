#include <iostream>

#include "dbal/cli.hpp"

int main(int argc, char** argv) { return dbal::cli::run(argc, argv, std::cout, std::cerr); }
