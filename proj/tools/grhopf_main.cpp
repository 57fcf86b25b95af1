#include <iostream>

#include "grhopf/cli.hpp"

int main(int argc, char** argv) { return grhopf::run_cli(argc, argv, std::cout, std::cerr); }
