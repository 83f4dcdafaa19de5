#include <iostream>

#include "connsets/cli.hpp"

int main(int argc, char** argv) { return connsets::cli::run(argc, argv, std::cout, std::cerr); }
