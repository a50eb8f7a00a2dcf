#include <iostream>

#include "timeslit/cli.hpp"

int main(int argc, char** argv) { return timeslit::cli::run(argc, argv, std::cout, std::cerr); }
