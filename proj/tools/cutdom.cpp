#include "cutdom/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cutdom::cli::run(argc, argv, std::cout, std::cerr); }
