#include <iostream>

#include "armcfg/cli.hpp"

int main(int argc, char** argv) { return armcfg::run_cli(argc, argv, std::cout, std::cerr); }
