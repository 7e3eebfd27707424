#include <iostream>

#include "cdsgame/cli.hpp"

int main(int argc, char** argv) { return cds::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
