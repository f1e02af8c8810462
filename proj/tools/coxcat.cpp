#include <iostream>

#include "coxcat/cli.hpp"

int main(int argc, char** argv) { return coxcat::run_cli(argc, argv, std::cout, std::cerr); }
