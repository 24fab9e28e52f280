#include "octica/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return octica::run_cli(argc, argv, std::cout, std::cerr); }
