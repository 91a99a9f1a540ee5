#include <iostream>

#include "qhyper/cli.hpp"

int main(int argc, char** argv) { return qhyper::run_cli(argc, argv, std::cout, std::cerr); }
