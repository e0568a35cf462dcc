#include <iostream>

#include "moore/cli.hpp"

int main(int argc, char** argv) { return moore::cli::run(argc, argv, std::cout, std::cerr); }
