#include "subsum/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return subsum::run(argc, argv, std::cout, std::cerr); }
