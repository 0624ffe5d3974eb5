#include <iostream>

#include "walks/cli.hpp"

int main(int argc, char** argv) { return walks::cli::run(argc, argv, std::cout, std::cerr); }
