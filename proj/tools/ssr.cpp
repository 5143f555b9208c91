#include <iostream>

#include "ssr/cli.hpp"

int main(int argc, char** argv) { return ssr::run_cli(argc, argv, std::cout, std::cerr); }
