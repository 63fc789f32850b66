#include <iostream>

#include "lfball_cli/commands.hpp"

int main(int argc, char** argv) { return lfball::cli::run(argc, argv, std::cout, std::cerr); }
