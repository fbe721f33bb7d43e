#include "cobord/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return cobord::cli::run(argc, argv, std::cout, std::cerr); }
