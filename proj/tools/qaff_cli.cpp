#include <iostream>

#include "qaff/cli.hpp"

int main(int argc, char** argv) { return qaff::cli::run(argc, argv, std::cout, std::cerr); }
