#include <iostream>

#include "mayerkit/cli.hpp"

int main(int argc, char** argv) { return mayer::cli::run(argc, argv, std::cout, std::cerr); }
