#include <iostream>

#include "kernel2d/cli.hpp"

int main(int argc, char** argv) { return kernel2d::run(argc, argv, std::cout, std::cerr); }
