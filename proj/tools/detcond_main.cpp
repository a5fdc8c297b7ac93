#include "detcond/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return detcond::run_cli(argc, argv, std::cout, std::cerr); }
