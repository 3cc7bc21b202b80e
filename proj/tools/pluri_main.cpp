#include <iostream>

#include "pluri/cli.hpp"

int main(int argc, char** argv) { return pluri::run_cli(argc, argv, std::cout, std::cerr); }
