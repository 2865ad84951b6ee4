#include <iostream>

#include "pars_io/cli.hpp"

int main(int argc, char** argv) { return pars::io::run_cli(argc, argv, std::cout, std::cerr); }
